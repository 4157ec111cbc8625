#include "factcheck/types.hpp"

#include <algorithm>
#include <charconv>

#include "factcheck/errors.hpp"
#include "factcheck/util.hpp"

namespace factcheck {

std::string to_string(VerdictLabel label) {
    switch (label) {
        case VerdictLabel::Supported: return "Supported";
        case VerdictLabel::Refuted: return "Refuted";
        case VerdictLabel::NotEnoughEvidence: return "Not Enough Evidence";
        case VerdictLabel::ConflictingEvidenceCherryPicking:
            return "Conflicting Evidence/Cherry-picking";
    }
    return "Not Enough Evidence";
}

const std::vector<LabelAlias>& builtin_label_aliases() {
    static const std::vector<LabelAlias> aliases = {
        {"conflicting evidence/cherry-picking", VerdictLabel::ConflictingEvidenceCherryPicking},
        {"conflicting evidence", VerdictLabel::ConflictingEvidenceCherryPicking},
        {"cherry-picking", VerdictLabel::ConflictingEvidenceCherryPicking},
        {"not enough evidence", VerdictLabel::NotEnoughEvidence},
        {"not enough information", VerdictLabel::NotEnoughEvidence},
        {"not enough info", VerdictLabel::NotEnoughEvidence},
        {"insufficient evidence", VerdictLabel::NotEnoughEvidence},
        {"not supported", VerdictLabel::Refuted}, // negated form, explicit on purpose
        {"supported", VerdictLabel::Supported},
        {"refuted", VerdictLabel::Refuted},
    };
    return aliases;
}

std::optional<VerdictLabel> find_verdict_label(std::string_view text,
                                               const std::vector<LabelAlias>& extra_aliases) {
    const std::string haystack = util::normalize_for_match(text);
    if (haystack.empty()) return std::nullopt;

    struct Candidate {
        std::string token; // normalized
        VerdictLabel label;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(builtin_label_aliases().size() + extra_aliases.size());
    for (const auto& alias : extra_aliases)
        candidates.push_back({util::normalize_for_match(alias.token), alias.label});
    for (const auto& alias : builtin_label_aliases())
        candidates.push_back({util::normalize_for_match(alias.token), alias.label});

    // Longest token wins so "not supported" is never shadowed by "supported".
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.token.size() > b.token.size();
                     });

    for (const auto& candidate : candidates) {
        if (candidate.token.empty()) continue;
        if (util::contains_word(haystack, candidate.token)) return candidate.label;
    }
    return std::nullopt;
}

VerdictLabel parse_verdict_label(std::string_view text,
                                 const std::vector<LabelAlias>& extra_aliases) {
    if (auto label = find_verdict_label(text, extra_aliases)) return *label;
    std::string excerpt(text.substr(0, 80));
    throw NoLabelFound("no verdict label found in: \"" + excerpt + "\"");
}

std::string to_string(SegmentKind kind) {
    switch (kind) {
        case SegmentKind::Sentence: return "sentence";
        case SegmentKind::Chunk: return "chunk";
        case SegmentKind::Document: return "document";
        case SegmentKind::Summary: return "summary";
    }
    return "document";
}

SegmentationStrategy SegmentationStrategy::sentence() {
    return {SegmentKind::Sentence, 0};
}

SegmentationStrategy SegmentationStrategy::chunk(int window) {
    if (window < 2) throw ConfigError("chunk window must be >= 2");
    return {SegmentKind::Chunk, window};
}

SegmentationStrategy SegmentationStrategy::document() {
    return {SegmentKind::Document, 0};
}

SegmentationStrategy SegmentationStrategy::parse(std::string_view text) {
    const std::string s = util::to_lower(util::trim(text));
    if (s == "sentence") return sentence();
    if (s == "document") return document();
    if (s.rfind("chunk:", 0) == 0) {
        int window = 0;
        const char* begin = s.data() + 6;
        const char* end = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(begin, end, window);
        if (ec == std::errc{} && ptr == end) return chunk(window);
    }
    throw ConfigError("unknown segmentation strategy \"" + std::string(text) +
                      "\" (expected sentence, document or chunk:N)");
}

std::string SegmentationStrategy::to_string() const {
    switch (kind) {
        case SegmentKind::Sentence: return "sentence";
        case SegmentKind::Document: return "document";
        case SegmentKind::Chunk: return "chunk:" + std::to_string(window);
        default: break;
    }
    return "document";
}

} // namespace factcheck
