#pragma once

#include <map>
#include <string>
#include <vector>

#include "factcheck/gateway.hpp"
#include "factcheck/knowledge_store.hpp"
#include "factcheck/prompts.hpp"
#include "factcheck/types.hpp"

namespace factcheck {

// A claim expanded into hypothetical fact-checking articles. The query
// vector is the re-normalized mean of the normalized embeddings of the claim
// and every article; with no articles it is just the normalized claim
// embedding.
struct ExpandedQuery {
    std::string claim_text;
    std::vector<std::string> articles;
    std::vector<float> vector;
};

// Samples article_count hypothetical articles with the hyde template and
// aggregates them with the claim into one query vector. A failed article
// generation is logged and skipped; if all fail the query degrades to the
// claim alone. article_count 0 disables expansion entirely.
ExpandedQuery expand_query(const Claim& claim,
                           int article_count,
                           const ChatStage& hyde,
                           const EmbeddingStage& embedder,
                           const PromptLibrary& prompts,
                           const DecodingProfile& decoding);

// Exact top-k by inner product (cosine, since vectors are normalized at
// index time). Ties break by ascending insertion order. Returns
// min(k, |entries|) units with retrieval_score populated.
std::vector<EvidenceUnit> search(const IndexedStore& store, const std::vector<float>& query, int k);
std::vector<EvidenceUnit> search(const IndexedStore& store, const ExpandedQuery& query, int k);

// Replaces each unit's text with its single-paragraph summary, marking it
// Summary; provenance and order are untouched. Units whose source url has a
// stored summary reuse it without a model call. A unit whose summarization
// fails passes through unchanged (logged).
std::vector<EvidenceUnit> summarize_retrieved(const std::vector<EvidenceUnit>& units,
                                              const std::map<std::string, std::string>& stored_summaries,
                                              const ChatStage& stage,
                                              const PromptLibrary& prompts,
                                              const DecodingProfile& decoding);

} // namespace factcheck
