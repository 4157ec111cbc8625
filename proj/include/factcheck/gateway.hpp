#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "factcheck/config.hpp"

namespace factcheck {

enum class ChatRole {
    System,
    User,
    Assistant,
};

std::string to_string(ChatRole role);

struct ChatMessage {
    ChatRole role = ChatRole::User;
    std::string content;

    bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
    std::vector<ChatMessage> messages;
    DecodingProfile decoding;
    std::string model_name;

    bool operator==(const ChatRequest&) const = default;
};

// The JSON body a chat request puts on the wire: model, messages, and the
// decoding fields that are set — nothing else.
nlohmann::json chat_request_body(const ChatRequest& request);
nlohmann::json embedding_request_body(const std::string& model,
                                      const std::vector<std::string>& input);

class ChatBackend {
public:
    virtual ~ChatBackend() = default;
    virtual std::string complete(const ChatRequest& request) = 0;
};

class EmbeddingBackend {
public:
    virtual ~EmbeddingBackend() = default;
    virtual std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) = 0;
};

// Line-delimited request/response audit log, shared across backends.
class RequestLog {
public:
    explicit RequestLog(const std::filesystem::path& path);
    void record(const nlohmann::json& line);

private:
    std::mutex mutex_;
    std::filesystem::path path_;
};

// Chat-completion client for the de-facto JSON HTTP schema served by common
// open-model servers. Transient transport failures (connection errors, 429,
// 5xx) are retried with exponential backoff; other statuses raise
// ServerError immediately.
class HttpChatBackend : public ChatBackend {
public:
    explicit HttpChatBackend(BackendDescriptor desc, std::shared_ptr<RequestLog> log = nullptr);
    std::string complete(const ChatRequest& request) override;

private:
    BackendDescriptor desc_;
    std::shared_ptr<RequestLog> log_;
};

class HttpEmbeddingBackend : public EmbeddingBackend {
public:
    explicit HttpEmbeddingBackend(BackendDescriptor desc, std::shared_ptr<RequestLog> log = nullptr);
    std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) override;

private:
    BackendDescriptor desc_;
    std::shared_ptr<RequestLog> log_;
};

// Deterministic scripted chat backend. Entries match on a substring of the
// concatenated message contents, first match wins; sequences are consumed in
// order with the last response repeating. Every request is captured for
// assertions.
class MockChatBackend : public ChatBackend {
public:
    MockChatBackend() = default;
    explicit MockChatBackend(std::string default_response);

    void script(std::string contains, std::string response);
    void script(std::string contains, std::vector<std::string> responses);
    void set_default(std::string response);
    void set_latency(std::chrono::milliseconds latency);

    std::string complete(const ChatRequest& request) override;

    std::vector<ChatRequest> captured() const;
    std::size_t call_count() const;

private:
    struct Entry {
        std::string contains;
        std::vector<std::string> responses;
        std::size_t next = 0;
    };

    mutable std::mutex mutex_;
    std::vector<Entry> entries_;
    std::optional<std::string> default_;
    std::chrono::milliseconds latency_{0};
    std::vector<ChatRequest> captured_;
};

// Embeds each text as a pseudo-random unit vector seeded from a stable hash
// of the text: pure, repeatable across runs and platforms, no model needed.
class MockEmbeddingBackend : public EmbeddingBackend {
public:
    explicit MockEmbeddingBackend(int dimension = 8);

    std::vector<std::vector<float>> embed(const std::vector<std::string>& texts) override;

    static std::vector<float> vector_for(std::string_view text, int dimension);

    void set_latency(std::chrono::milliseconds latency);
    std::vector<std::size_t> batch_sizes() const; // one entry per embed() call

private:
    int dimension_;
    std::chrono::milliseconds latency_{0};
    mutable std::mutex mutex_;
    std::vector<std::size_t> batch_sizes_;
};

// A backend bound to a model name: what pipeline operations call. Enforces
// the non-empty completion contract for every backend kind.
struct ChatStage {
    std::shared_ptr<ChatBackend> backend;
    std::string model;

    // Throws EmptyCompletion when the backend produces blank content.
    std::string complete(std::vector<ChatMessage> messages, const DecodingProfile& decoding) const;
    std::string complete(const ChatRequest& request) const;
};

struct EmbeddingStage {
    std::shared_ptr<EmbeddingBackend> backend;
    std::string model;
    int batch_cap = 32;

    // One vector per input, order-preserving; large inputs are split into
    // batches of at most batch_cap transparently. All vectors must agree on
    // dimension and be finite, otherwise DimensionMismatch / ServerError.
    std::vector<std::vector<float>> embed_batch(const std::vector<std::string>& texts) const;
};

std::shared_ptr<ChatBackend> make_chat_backend(const BackendDescriptor& desc,
                                               std::shared_ptr<RequestLog> log = nullptr);
std::shared_ptr<EmbeddingBackend> make_embedding_backend(const BackendDescriptor& desc,
                                                         std::shared_ptr<RequestLog> log = nullptr);

struct Stages {
    ChatStage hyde;
    ChatStage summarize;
    ChatStage question;
    ChatStage answer;
    ChatStage verdict;
    ChatStage judge;
    EmbeddingStage embedding;
};

// Instantiates every stage backend from the config descriptors. When the
// config names a request log path, HTTP backends share one log.
Stages make_stages(const PipelineConfig& config);

} // namespace factcheck
