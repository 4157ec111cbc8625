#pragma once

#include <string>
#include <vector>

#include "factcheck/gateway.hpp"
#include "factcheck/prompts.hpp"
#include "factcheck/types.hpp"

namespace factcheck {

// One verification question for an evidence unit, via the question template.
// Blank model output is retried once, then EmptyCompletion propagates so the
// caller can skip the unit. Evidence with blank text is rejected up front.
std::string generate_question(const Claim& claim,
                              const EvidenceUnit& evidence,
                              const ChatStage& stage,
                              const PromptLibrary& prompts,
                              const DecodingProfile& decoding);

// Rewrites the evidence into a direct answer conditioned on claim and
// question. A blank answer falls back to the raw evidence text (logged) so
// the pipeline stays total.
QAPair reformulate_answer(const Claim& claim,
                          const std::string& question,
                          const EvidenceUnit& evidence,
                          const ChatStage& stage,
                          const PromptLibrary& prompts,
                          const DecodingProfile& decoding);

// Question + answer per unit, walked in retrieval order and truncated to
// `limit` pairs. Skipped units (blank evidence, persistent empty questions)
// do not consume limit slots. With reformulate off the raw unit text stands
// in as the answer and no reformulation call is made.
std::vector<QAPair> build_qa_set(const Claim& claim,
                                 const std::vector<EvidenceUnit>& units,
                                 int limit,
                                 const ChatStage& question_stage,
                                 const ChatStage& answer_stage,
                                 const PromptLibrary& prompts,
                                 const DecodingProfile& decoding,
                                 bool reformulate = true);

} // namespace factcheck
