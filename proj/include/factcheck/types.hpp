#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factcheck {

// The four verdict classes a claim can end up in.
enum class VerdictLabel {
    Supported,
    Refuted,
    NotEnoughEvidence,
    ConflictingEvidenceCherryPicking,
};

inline constexpr std::array<VerdictLabel, 4> kAllVerdictLabels = {
    VerdictLabel::Supported,
    VerdictLabel::Refuted,
    VerdictLabel::NotEnoughEvidence,
    VerdictLabel::ConflictingEvidenceCherryPicking,
};

// Canonical display form, e.g. "Conflicting Evidence/Cherry-picking".
std::string to_string(VerdictLabel label);

struct LabelAlias {
    std::string token; // matched case-insensitively on word boundaries
    VerdictLabel label;

    bool operator==(const LabelAlias&) const = default;
};

// Built-in alias table. Served models paraphrase labels, so parsing accepts
// more than the canonical strings; negated forms ("not supported") map to
// Refuted only through this explicit table, never by token scanning.
const std::vector<LabelAlias>& builtin_label_aliases();

// Scans `text` for a label token anywhere, preferring the longest alias.
// Matching is case-insensitive and ignores punctuation. Returns nothing when
// no alias occurs.
std::optional<VerdictLabel> find_verdict_label(std::string_view text,
                                               const std::vector<LabelAlias>& extra_aliases = {});

// Like find_verdict_label but throws NoLabelFound, signalling the caller to
// retry generation.
VerdictLabel parse_verdict_label(std::string_view text,
                                 const std::vector<LabelAlias>& extra_aliases = {});

struct GoldQA {
    std::string question;
    std::string answer;

    bool operator==(const GoldQA&) const = default;
};

// The unit of verification. Gold fields are present on annotated sets and
// absent on raw test claims.
struct Claim {
    std::string id;
    std::string text;
    std::optional<VerdictLabel> gold_label;
    std::vector<GoldQA> gold_evidence;

    bool operator==(const Claim&) const = default;
};

enum class SegmentKind : std::uint8_t {
    Sentence = 0,
    Chunk = 1,
    Document = 2,
    Summary = 3,
};

std::string to_string(SegmentKind kind);

// How source documents are cut into retrievable units. Chunks slide over the
// sentence list with a fixed one-sentence overlap.
struct SegmentationStrategy {
    SegmentKind kind = SegmentKind::Document;
    int window = 0; // sentences per chunk; Chunk only, >= 2

    static SegmentationStrategy sentence();
    static SegmentationStrategy chunk(int window); // throws ConfigError when window < 2
    static SegmentationStrategy document();

    // Accepts "sentence", "document", "chunk:N".
    static SegmentationStrategy parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const SegmentationStrategy&) const = default;
};

// A retrieved, optionally summarized span of text with provenance back into
// its source document.
struct EvidenceUnit {
    std::string claim_id;
    std::string source_url;
    SegmentKind kind = SegmentKind::Document;
    int chunk_window = 0; // Chunk only
    std::string text;
    std::size_t span_begin = 0; // inclusive sentence indices in the source document
    std::size_t span_end = 0;
    double retrieval_score = 0.0;

    bool operator==(const EvidenceUnit&) const = default;
};

struct QAPair {
    std::string question;
    std::string answer;
    EvidenceUnit evidence;

    bool operator==(const QAPair&) const = default;
};

} // namespace factcheck
