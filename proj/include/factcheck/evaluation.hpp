#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "factcheck/gateway.hpp"
#include "factcheck/prompts.hpp"
#include "factcheck/types.hpp"
#include "factcheck/verdict.hpp"

namespace factcheck {

// Gold evidence decomposed into minimal self-contained statements by the
// judge model.
struct AtomicFactSet {
    std::string claim_id;
    std::vector<std::string> facts;
    bool used_fallback = false; // facts are the raw gold answers
};

struct ScoredClaim {
    std::string claim_id;
    double qa_recall = 0.0;
    bool label_correct = false;
    bool passes_threshold = false; // qa_recall >= threshold
    bool has_gold_evidence = true;
};

// Parses a numbered or bulleted list into one string per item. Lines without
// a list marker are ignored.
std::vector<std::string> parse_fact_list(const std::string& text);

// Sends the claim's gold QA text to the judge with the decomposition
// template. Unparseable output is retried once, then each gold answer counts
// as one fact (used_fallback). Empty gold evidence yields an empty fact set;
// such claims are excluded from Q+A scoring upstream.
AtomicFactSet decompose_gold(const Claim& claim,
                             const ChatStage& judge,
                             const PromptLibrary& prompts,
                             const DecodingProfile& decoding);

// Fraction of gold facts the judge deems supported by the predicted
// evidence. A per-fact judge failure counts the fact as unsupported
// (logged). Throws std::invalid_argument on an empty fact set.
double qa_recall(const AtomicFactSet& facts,
                 const std::vector<QAPair>& predicted_qa,
                 const ChatStage& judge,
                 const PromptLibrary& prompts,
                 const DecodingProfile& decoding);
double qa_recall(const AtomicFactSet& facts,
                 const std::string& predicted_evidence,
                 const ChatStage& judge,
                 const PromptLibrary& prompts,
                 const DecodingProfile& decoding);

// |{c : qa_recall(c) >= tau and label_correct(c)}| / |scored|. The boundary
// is >= by design so tau = 0 recovers plain accuracy.
double averitec_score(const std::vector<ScoredClaim>& scored, double tau);

struct LabelMetrics {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
};

// Accuracy and unweighted macro-F1 over the four labels, matching records to
// gold claims by id. Classes absent from both gold and predictions drop out
// of the macro average. A record whose claim lacks a gold label is an error
// naming the claim id.
LabelMetrics label_metrics(const std::vector<VerdictRecord>& records,
                           const std::vector<Claim>& gold);

struct RunReport {
    double threshold = 0.5;
    int claims_scored = 0;
    int claims_without_gold_evidence = 0;
    double qa_recall_mean = 0.0; // over claims with gold evidence
    double averitec = 0.0;
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    double mean_runtime_seconds = 0.0;
    std::vector<ScoredClaim> per_claim; // run-file order
};

// Scores a completed run against gold annotations: judges per-claim Q+A
// recall, applies the threshold, and aggregates label metrics and runtime.
// A claim-id mismatch between run and gold is an error listing the ids.
RunReport score_run(const std::filesystem::path& run_file,
                    const std::filesystem::path& gold_file,
                    double tau,
                    const ChatStage& judge,
                    const PromptLibrary& prompts,
                    const DecodingProfile& judge_decoding);

std::string render_report(const RunReport& report);
nlohmann::json report_to_json(const RunReport& report);

} // namespace factcheck
