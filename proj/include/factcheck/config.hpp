#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "factcheck/types.hpp"

namespace factcheck {

// Sampling parameters forwarded verbatim onto the wire. Unset fields are
// omitted from the request body.
struct DecodingProfile {
    std::optional<int> max_tokens;
    std::optional<double> temperature;
    std::optional<double> top_p;
    std::optional<int> top_k;
    std::optional<double> min_p;

    bool operator==(const DecodingProfile&) const = default;
};

// Defaults per stage: query expansion samples long articles at temperature
// 0.7 / top-p 1.0; summarization, question generation, answer reformulation
// and judging share the generation profile; verdicts decode greedily with
// top-k 1 (flipped to 2 on the one retry).
DecodingProfile default_hyde_decoding();       // {max_tokens 512, temperature 0.7, top_p 1.0}
DecodingProfile default_generation_decoding(); // {temperature 0.7, top_p 0.8, top_k 20, min_p 0}
DecodingProfile default_verdict_decoding();    // {temperature 0.9, top_p 0.7, top_k 1}

enum class BackendKind {
    HttpChat,
    HttpEmbedding,
    Mock,
};

std::string to_string(BackendKind kind);
BackendKind parse_backend_kind(std::string_view text);

// One scripted response (or a consume-in-order sequence) for mock backends.
struct MockScriptEntry {
    std::string contains;               // substring matched against the prompt
    std::vector<std::string> responses; // consumed in order; last one repeats

    bool operator==(const MockScriptEntry&) const = default;
};

// Where one pipeline stage sends its requests.
struct BackendDescriptor {
    BackendKind kind = BackendKind::HttpChat;
    std::string base_url = "http://localhost:8000";
    std::string model;
    std::string auth_env = "FACTCHECK_API_KEY"; // env var holding the bearer token
    std::string path; // request path; defaults per kind when empty
    double timeout_seconds = 30.0;
    int max_retries = 2;
    double backoff_base_seconds = 0.5;
    int batch_cap = 32; // embedding requests per call

    // Mock settings (kind == Mock only).
    std::vector<MockScriptEntry> mock_script;
    std::optional<std::string> mock_default;
    int mock_dimension = 8;
    double mock_latency_ms = 0.0;

    bool operator==(const BackendDescriptor&) const = default;
};

struct StageBackends {
    BackendDescriptor hyde;
    BackendDescriptor summarize;
    BackendDescriptor question;
    BackendDescriptor answer;
    BackendDescriptor verdict;
    BackendDescriptor judge;
    BackendDescriptor embedding;

    bool operator==(const StageBackends&) const = default;
};

struct PipelineConfig {
    int top_k_documents = 10;
    int top_k_qa_pairs = 10;
    SegmentationStrategy segmentation = SegmentationStrategy::document();
    double ev2r_threshold = 0.5; // compared as qa_recall >= threshold
    double per_claim_budget_seconds = 60.0;

    int hyde_articles = 4;
    bool expand_queries = true;
    bool summarize_retrieved = true;
    bool reformulate_answers = true;
    // Summaries are produced after retrieval by default; this switches them
    // to index-build time (stored alongside the index, substituted after
    // retrieval without another model call).
    bool summarize_at_index_time = false;

    int document_sentence_cap = 256; // truncation fallback for oversize documents
    int parallelism = 0;             // claim-level workers; 0 = hardware threads
    bool deterministic_timing = false; // record elapsed as 0 for reproducible outputs

    std::string prompt_dir;       // optional template overrides, <name>.txt per prompt
    std::string request_log_path; // optional line-delimited request/response audit log

    DecodingProfile hyde_decoding = default_hyde_decoding();
    DecodingProfile generation_decoding = default_generation_decoding();
    DecodingProfile verdict_decoding = default_verdict_decoding();

    StageBackends stages;
    std::vector<LabelAlias> label_aliases; // extends the built-in table

    // Throws ConfigError when a field is out of range.
    void validate() const;

    bool operator==(const PipelineConfig&) const = default;
};

// Default endpoints assume locally served models on ports 8000 (chat) and
// 8001 (embeddings).
PipelineConfig default_config();

void to_json(nlohmann::json& j, const DecodingProfile& profile);
void from_json(const nlohmann::json& j, DecodingProfile& profile);
void to_json(nlohmann::json& j, const BackendDescriptor& desc);
void from_json(const nlohmann::json& j, BackendDescriptor& desc);
void to_json(nlohmann::json& j, const StageBackends& stages);
void from_json(const nlohmann::json& j, StageBackends& stages);
void to_json(nlohmann::json& j, const PipelineConfig& config);
void from_json(const nlohmann::json& j, PipelineConfig& config);

// UTF-8 JSON document; load validates. Serialize-then-parse is value-identical.
PipelineConfig load_config(const std::filesystem::path& path);
void save_config(const PipelineConfig& config, const std::filesystem::path& path);

} // namespace factcheck
