#include "factcheck/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "factcheck/errors.hpp"
#include "factcheck/util.hpp"

namespace factcheck {

using nlohmann::json;

DecodingProfile default_hyde_decoding() {
    DecodingProfile p;
    p.max_tokens = 512;
    p.temperature = 0.7;
    p.top_p = 1.0;
    return p;
}

DecodingProfile default_generation_decoding() {
    DecodingProfile p;
    p.temperature = 0.7;
    p.top_p = 0.8;
    p.top_k = 20;
    p.min_p = 0.0;
    return p;
}

DecodingProfile default_verdict_decoding() {
    DecodingProfile p;
    p.temperature = 0.9;
    p.top_p = 0.7;
    p.top_k = 1;
    return p;
}

std::string to_string(BackendKind kind) {
    switch (kind) {
        case BackendKind::HttpChat: return "http_chat";
        case BackendKind::HttpEmbedding: return "http_embedding";
        case BackendKind::Mock: return "mock";
    }
    return "mock";
}

BackendKind parse_backend_kind(std::string_view text) {
    const std::string s = util::to_lower(util::trim(text));
    if (s == "http_chat") return BackendKind::HttpChat;
    if (s == "http_embedding") return BackendKind::HttpEmbedding;
    if (s == "mock") return BackendKind::Mock;
    throw ConfigError("unknown backend kind \"" + std::string(text) + "\"");
}

PipelineConfig default_config() {
    PipelineConfig config;

    auto chat = [](const std::string& model) {
        BackendDescriptor d;
        d.kind = BackendKind::HttpChat;
        d.base_url = "http://localhost:8000";
        d.model = model;
        return d;
    };
    config.stages.hyde = chat("meta-llama/Llama-3.1-8B-Instruct");
    config.stages.summarize = chat("Qwen/Qwen3-8B");
    config.stages.question = chat("Qwen/Qwen3-8B");
    config.stages.answer = chat("Qwen/Qwen3-8B");
    config.stages.verdict = chat("Qwen/Qwen3-32B-AWQ");
    config.stages.judge = chat("meta-llama/Llama-3.3-70B-Instruct");

    BackendDescriptor embed;
    embed.kind = BackendKind::HttpEmbedding;
    embed.base_url = "http://localhost:8001";
    embed.model = "Alibaba-NLP/gte-base-en-v1.5";
    config.stages.embedding = embed;

    return config;
}

namespace {

void check(bool condition, const char* message) {
    if (!condition) throw ConfigError(message);
}

void validate_probability(const std::optional<double>& value, const char* name) {
    if (value && (*value < 0.0 || *value > 1.0))
        throw ConfigError(std::string(name) + " must be in [0, 1]");
}

void validate_decoding(const DecodingProfile& p, const char* name) {
    if (p.max_tokens && *p.max_tokens < 1)
        throw ConfigError(std::string(name) + ".max_tokens must be >= 1");
    if (p.temperature && *p.temperature < 0.0)
        throw ConfigError(std::string(name) + ".temperature must be >= 0");
    validate_probability(p.top_p, "top_p");
    validate_probability(p.min_p, "min_p");
    if (p.top_k && *p.top_k < 1) throw ConfigError(std::string(name) + ".top_k must be >= 1");
}

void validate_backend(const BackendDescriptor& d, const char* name) {
    if (d.timeout_seconds <= 0.0)
        throw ConfigError(std::string(name) + ".timeout_seconds must be > 0");
    if (d.max_retries < 0) throw ConfigError(std::string(name) + ".max_retries must be >= 0");
    if (d.backoff_base_seconds < 0.0)
        throw ConfigError(std::string(name) + ".backoff_base_seconds must be >= 0");
    if (d.batch_cap < 1) throw ConfigError(std::string(name) + ".batch_cap must be >= 1");
    if (d.mock_dimension < 1) throw ConfigError(std::string(name) + ".mock.dimension must be >= 1");
    if (d.kind != BackendKind::Mock && d.base_url.empty())
        throw ConfigError(std::string(name) + ".base_url must be set");
}

} // namespace

void PipelineConfig::validate() const {
    check(top_k_documents >= 1, "top_k_documents must be >= 1");
    check(top_k_qa_pairs >= 1, "top_k_qa_pairs must be >= 1");
    check(ev2r_threshold >= 0.0 && ev2r_threshold <= 1.0, "ev2r_threshold must be in [0, 1]");
    check(per_claim_budget_seconds > 0.0, "per_claim_budget_seconds must be > 0");
    check(hyde_articles >= 0, "hyde_articles must be >= 0");
    check(document_sentence_cap >= 0, "document_sentence_cap must be >= 0");
    check(parallelism >= 0, "parallelism must be >= 0");
    if (segmentation.kind == SegmentKind::Chunk && segmentation.window < 2)
        throw ConfigError("segmentation chunk window must be >= 2");
    if (segmentation.kind == SegmentKind::Summary)
        throw ConfigError("summary is not a segmentation strategy");

    validate_decoding(hyde_decoding, "decoding.hyde");
    validate_decoding(generation_decoding, "decoding.generation");
    validate_decoding(verdict_decoding, "decoding.verdict");

    validate_backend(stages.hyde, "stages.hyde");
    validate_backend(stages.summarize, "stages.summarize");
    validate_backend(stages.question, "stages.question");
    validate_backend(stages.answer, "stages.answer");
    validate_backend(stages.verdict, "stages.verdict");
    validate_backend(stages.judge, "stages.judge");
    validate_backend(stages.embedding, "stages.embedding");
}

void to_json(json& j, const DecodingProfile& p) {
    j = json::object();
    if (p.max_tokens) j["max_tokens"] = *p.max_tokens;
    if (p.temperature) j["temperature"] = *p.temperature;
    if (p.top_p) j["top_p"] = *p.top_p;
    if (p.top_k) j["top_k"] = *p.top_k;
    if (p.min_p) j["min_p"] = *p.min_p;
}

void from_json(const json& j, DecodingProfile& p) {
    p = DecodingProfile{};
    if (j.contains("max_tokens")) p.max_tokens = j.at("max_tokens").get<int>();
    if (j.contains("temperature")) p.temperature = j.at("temperature").get<double>();
    if (j.contains("top_p")) p.top_p = j.at("top_p").get<double>();
    if (j.contains("top_k")) p.top_k = j.at("top_k").get<int>();
    if (j.contains("min_p")) p.min_p = j.at("min_p").get<double>();
}

void to_json(json& j, const BackendDescriptor& d) {
    j = json{
        {"kind", to_string(d.kind)},
        {"base_url", d.base_url},
        {"model", d.model},
        {"auth_env", d.auth_env},
        {"path", d.path},
        {"timeout_seconds", d.timeout_seconds},
        {"max_retries", d.max_retries},
        {"backoff_base_seconds", d.backoff_base_seconds},
        {"batch_cap", d.batch_cap},
    };
    if (d.kind == BackendKind::Mock) {
        json script = json::array();
        for (const auto& entry : d.mock_script)
            script.push_back(json{{"contains", entry.contains}, {"responses", entry.responses}});
        json mock{{"script", script},
                  {"dimension", d.mock_dimension},
                  {"latency_ms", d.mock_latency_ms}};
        if (d.mock_default) mock["default"] = *d.mock_default;
        j["mock"] = mock;
    }
}

void from_json(const json& j, BackendDescriptor& d) {
    d = BackendDescriptor{};
    if (j.contains("kind")) d.kind = parse_backend_kind(j.at("kind").get<std::string>());
    if (j.contains("base_url")) d.base_url = j.at("base_url").get<std::string>();
    if (j.contains("model")) d.model = j.at("model").get<std::string>();
    if (j.contains("auth_env")) d.auth_env = j.at("auth_env").get<std::string>();
    if (j.contains("path")) d.path = j.at("path").get<std::string>();
    if (j.contains("timeout_seconds")) d.timeout_seconds = j.at("timeout_seconds").get<double>();
    if (j.contains("max_retries")) d.max_retries = j.at("max_retries").get<int>();
    if (j.contains("backoff_base_seconds"))
        d.backoff_base_seconds = j.at("backoff_base_seconds").get<double>();
    if (j.contains("batch_cap")) d.batch_cap = j.at("batch_cap").get<int>();
    if (j.contains("mock")) {
        const json& mock = j.at("mock");
        if (mock.contains("script")) {
            for (const auto& entry : mock.at("script")) {
                MockScriptEntry e;
                e.contains = entry.value("contains", std::string{});
                if (entry.contains("responses"))
                    e.responses = entry.at("responses").get<std::vector<std::string>>();
                else if (entry.contains("response"))
                    e.responses = {entry.at("response").get<std::string>()};
                d.mock_script.push_back(std::move(e));
            }
        }
        if (mock.contains("default")) d.mock_default = mock.at("default").get<std::string>();
        if (mock.contains("dimension")) d.mock_dimension = mock.at("dimension").get<int>();
        if (mock.contains("latency_ms")) d.mock_latency_ms = mock.at("latency_ms").get<double>();
    }
}

void to_json(json& j, const StageBackends& stages) {
    j = json{
        {"hyde", stages.hyde},         {"summarize", stages.summarize},
        {"question", stages.question}, {"answer", stages.answer},
        {"verdict", stages.verdict},   {"judge", stages.judge},
        {"embedding", stages.embedding},
    };
}

void from_json(const json& j, StageBackends& stages) {
    stages = StageBackends{};
    if (j.contains("hyde")) j.at("hyde").get_to(stages.hyde);
    if (j.contains("summarize")) j.at("summarize").get_to(stages.summarize);
    if (j.contains("question")) j.at("question").get_to(stages.question);
    if (j.contains("answer")) j.at("answer").get_to(stages.answer);
    if (j.contains("verdict")) j.at("verdict").get_to(stages.verdict);
    if (j.contains("judge")) j.at("judge").get_to(stages.judge);
    if (j.contains("embedding")) j.at("embedding").get_to(stages.embedding);
}

void to_json(json& j, const PipelineConfig& c) {
    json aliases = json::object();
    for (const auto& alias : c.label_aliases) aliases[alias.token] = to_string(alias.label);

    j = json{
        {"top_k_documents", c.top_k_documents},
        {"top_k_qa_pairs", c.top_k_qa_pairs},
        {"segmentation", c.segmentation.to_string()},
        {"ev2r_threshold", c.ev2r_threshold},
        {"per_claim_budget_seconds", c.per_claim_budget_seconds},
        {"hyde_articles", c.hyde_articles},
        {"expand_queries", c.expand_queries},
        {"summarize_retrieved", c.summarize_retrieved},
        {"reformulate_answers", c.reformulate_answers},
        {"summarize_at_index_time", c.summarize_at_index_time},
        {"document_sentence_cap", c.document_sentence_cap},
        {"parallelism", c.parallelism},
        {"deterministic_timing", c.deterministic_timing},
        {"prompt_dir", c.prompt_dir},
        {"request_log_path", c.request_log_path},
        {"decoding",
         json{{"hyde", c.hyde_decoding},
              {"generation", c.generation_decoding},
              {"verdict", c.verdict_decoding}}},
        {"stages", c.stages},
        {"label_aliases", aliases},
    };
}

void from_json(const json& j, PipelineConfig& c) {
    c = default_config();
    if (j.contains("top_k_documents")) c.top_k_documents = j.at("top_k_documents").get<int>();
    if (j.contains("top_k_qa_pairs")) c.top_k_qa_pairs = j.at("top_k_qa_pairs").get<int>();
    if (j.contains("segmentation"))
        c.segmentation = SegmentationStrategy::parse(j.at("segmentation").get<std::string>());
    if (j.contains("ev2r_threshold")) c.ev2r_threshold = j.at("ev2r_threshold").get<double>();
    if (j.contains("per_claim_budget_seconds"))
        c.per_claim_budget_seconds = j.at("per_claim_budget_seconds").get<double>();
    if (j.contains("hyde_articles")) c.hyde_articles = j.at("hyde_articles").get<int>();
    if (j.contains("expand_queries")) c.expand_queries = j.at("expand_queries").get<bool>();
    if (j.contains("summarize_retrieved"))
        c.summarize_retrieved = j.at("summarize_retrieved").get<bool>();
    if (j.contains("reformulate_answers"))
        c.reformulate_answers = j.at("reformulate_answers").get<bool>();
    if (j.contains("summarize_at_index_time"))
        c.summarize_at_index_time = j.at("summarize_at_index_time").get<bool>();
    if (j.contains("document_sentence_cap"))
        c.document_sentence_cap = j.at("document_sentence_cap").get<int>();
    if (j.contains("parallelism")) c.parallelism = j.at("parallelism").get<int>();
    if (j.contains("deterministic_timing"))
        c.deterministic_timing = j.at("deterministic_timing").get<bool>();
    if (j.contains("prompt_dir")) c.prompt_dir = j.at("prompt_dir").get<std::string>();
    if (j.contains("request_log_path"))
        c.request_log_path = j.at("request_log_path").get<std::string>();
    if (j.contains("decoding")) {
        const json& d = j.at("decoding");
        if (d.contains("hyde")) d.at("hyde").get_to(c.hyde_decoding);
        if (d.contains("generation")) d.at("generation").get_to(c.generation_decoding);
        if (d.contains("verdict")) d.at("verdict").get_to(c.verdict_decoding);
    }
    if (j.contains("stages")) j.at("stages").get_to(c.stages);
    if (j.contains("label_aliases")) {
        c.label_aliases.clear();
        for (const auto& [token, label] : j.at("label_aliases").items())
            c.label_aliases.push_back({token, parse_verdict_label(label.get<std::string>())});
    }
}

PipelineConfig load_config(const std::filesystem::path& path) {
    const std::string text = util::read_text_file(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("config " + path.string() + " is not valid JSON");
    PipelineConfig config = j.get<PipelineConfig>();
    config.validate();
    return config;
}

void save_config(const PipelineConfig& config, const std::filesystem::path& path) {
    const json j = config;
    util::write_text_file(path, j.dump(2) + "\n");
}

} // namespace factcheck
