#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "factcheck/gateway.hpp"
#include "factcheck/prompts.hpp"
#include "factcheck/types.hpp"

namespace factcheck {

// A pre-extracted web document from the per-claim knowledge store.
struct SourceDocument {
    std::string claim_id;
    std::string url;
    std::vector<std::string> sentences;

    bool operator==(const SourceDocument&) const = default;
};

struct IndexEntry {
    EvidenceUnit unit;
    std::vector<float> embedding; // L2-normalized at index time

    bool operator==(const IndexEntry&) const = default;
};

// Per-claim searchable index: segmented evidence units with their embeddings,
// plus any document summaries produced at build time.
struct IndexedStore {
    std::string claim_id;
    int dimension = 0;
    SegmentationStrategy strategy;
    std::vector<IndexEntry> entries;
    std::map<std::string, std::string> summaries; // url -> summary paragraph

    bool operator==(const IndexedStore&) const = default;
};

// Reads one knowledge-store file: line-delimited JSON records with fields
// "url" and "sentences" (the task's "url2text" spelling is accepted too).
// The claim id is the file stem. Order is preserved and sentence text is
// taken verbatim. Throws FormatError naming the offending line, EmptyStore
// when the file holds zero documents.
std::vector<SourceDocument> ingest(const std::filesystem::path& path);

// Cuts a document into evidence units:
//   Sentence  -> one unit per sentence, span (i, i)
//   Chunk(w)  -> spans (0, w-1), (w-1, 2w-2), ... stepping w-1 so consecutive
//                chunks share exactly one sentence; the final chunk truncates
//                at the document end
//   Document  -> a single unit spanning everything
// Unit text is the spanned sentences joined by single spaces.
std::vector<EvidenceUnit> segment(const SourceDocument& doc, const SegmentationStrategy& strategy);

// Single-paragraph summary of the document via the summarize template.
// Documents longer than sentence_cap sentences are truncated to the first
// sentence_cap before prompting (cap <= 0 disables truncation).
std::string summarize_document(const SourceDocument& doc,
                               const ChatStage& stage,
                               const PromptLibrary& prompts,
                               const DecodingProfile& decoding,
                               int sentence_cap);

struct BuildOutcome {
    IndexedStore store;
    int documents_indexed = 0;
    std::vector<std::string> failures; // "url: reason", one per failed document
};

// Segments and embeds every document. Embedding text is capped at
// sentence_cap sentences per unit; stored unit text is never truncated.
// A document that fails to embed is recorded in failures and skipped — the
// index is still built from the successes.
BuildOutcome build_index(const std::string& claim_id,
                         const std::vector<SourceDocument>& docs,
                         const SegmentationStrategy& strategy,
                         const EmbeddingStage& embedder,
                         const std::map<std::string, std::string>& summaries = {},
                         int sentence_cap = 0);

// Versioned little-endian binary format; see the layout notes in the
// implementation. Vectors persist as 32-bit floats and round-trip exactly at
// that precision.
void save_index(const IndexedStore& store, const std::filesystem::path& path);
IndexedStore load_index(const std::filesystem::path& path);

} // namespace factcheck
