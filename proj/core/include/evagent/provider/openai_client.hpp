#pragma once

#include <chrono>
#include <functional>
#include <string>

#include "evagent/provider/provider.hpp"

namespace evagent::provider {

struct RemoteProviderConfig {
    // e.g. "http://127.0.0.1:8080"; the client appends /v1/chat/completions.
    std::string base_url;
    std::string model = "deepseek-chat";
    // Name of the environment variable holding the API key. The key is sent
    // as a bearer token and never logged.
    std::string api_key_env = "EVAGENT_API_KEY";
    std::chrono::milliseconds timeout{30'000};
    int retries = 2;
    std::chrono::milliseconds backoff_base{200};
};

// Request body with canonical (sorted) key order, so identical requests are
// byte-identical on the wire.
std::string chat_request_body(const std::string& model, const CompletionRequest& req);

// Extracts choices[0].message.content; throws ProviderError(malformed_reply).
std::string parse_chat_reply(const std::string& body);

// Chat-completion client for OpenAI-compatible endpoints. Transport
// failures, 429 and 5xx responses are retried up to `retries` times with
// exponential backoff; then ProviderError(exhausted) is raised.
class OpenAiCompatibleProvider final : public ReasoningProvider {
public:
    explicit OpenAiCompatibleProvider(RemoteProviderConfig cfg);

    Message complete(const CompletionRequest& req) override;

    // Replaces the sleep used between retries (tests).
    void set_sleeper(std::function<void(std::chrono::milliseconds)> sleeper) { sleeper_ = std::move(sleeper); }

private:
    Message attempt(const std::string& body);

    RemoteProviderConfig cfg_;
    std::function<void(std::chrono::milliseconds)> sleeper_;
};

}  // namespace evagent::provider
