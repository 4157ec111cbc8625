#pragma once

#include <string>
#include <vector>

#include "factcheck/gateway.hpp"
#include "factcheck/prompts.hpp"
#include "factcheck/types.hpp"

namespace factcheck {

// Outcome of verifying one claim. elapsed_seconds is the stage time when the
// record comes straight from predict_verdict; the orchestrator overwrites it
// with the claim's total processing time before writing run output.
struct VerdictRecord {
    std::string claim_id;
    VerdictLabel predicted = VerdictLabel::NotEnoughEvidence;
    std::vector<QAPair> qa_used;
    int attempts = 1; // 1 or 2
    double elapsed_seconds = 0.0;
    bool parse_failed = false; // both attempts produced no label
    bool over_budget = false;
    std::vector<std::string> stage_trace; // orchestrator-filled, not serialized
};

// Prompt listing up to max_pairs QA pairs as in-context evidence, then the
// claim, then the rationale-style instruction asking for one of the four
// labels. Zero pairs select the documented no-evidence variant. The verdict
// decoding profile rides along on the request.
ChatRequest assemble_verdict_prompt(const Claim& claim,
                                    const std::vector<QAPair>& qa_pairs,
                                    const PromptLibrary& prompts,
                                    const DecodingProfile& decoding,
                                    const std::string& model,
                                    int max_pairs);

// First attempt uses the configured decoding (top-k 1); if no label parses,
// one retry with top-k 2 and everything else unchanged; if that also fails,
// the deterministic fallback label is NotEnoughEvidence with parse_failed
// set. Transport errors propagate.
VerdictRecord predict_verdict(const Claim& claim,
                              const std::vector<QAPair>& qa_pairs,
                              const ChatStage& stage,
                              const PromptLibrary& prompts,
                              const DecodingProfile& decoding,
                              int max_pairs,
                              const std::vector<LabelAlias>& extra_aliases = {});

} // namespace factcheck
