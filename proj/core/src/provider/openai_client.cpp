#include "evagent/provider/openai_client.hpp"

#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "evagent/net/url.hpp"

namespace evagent::provider {

namespace {

bool retryable_status(int status) { return status == 429 || (status >= 500 && status <= 599); }

}  // namespace

std::string chat_request_body(const std::string& model, const CompletionRequest& req) {
    nlohmann::json body;
    body["model"] = model;
    body["messages"] = req.messages;
    body["temperature"] = req.temperature;
    body["max_tokens"] = req.max_output;
    // nlohmann::json objects are std::map-backed, so keys serialize sorted.
    return body.dump();
}

std::string parse_chat_reply(const std::string& body) {
    using Kind = ProviderError::Kind;
    const auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded()) throw ProviderError(Kind::malformed_reply, "reply is not JSON");
    try {
        const auto& content = j.at("choices").at(0).at("message").at("content");
        if (!content.is_string()) throw ProviderError(Kind::malformed_reply, "content is not a string");
        return content.get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(Kind::malformed_reply, std::string("missing choices[0].message.content: ") + e.what());
    }
}

OpenAiCompatibleProvider::OpenAiCompatibleProvider(RemoteProviderConfig cfg)
    : cfg_(std::move(cfg)), sleeper_([](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); }) {
    if (cfg_.base_url.empty()) throw ConfigError("remote provider requires base_url");
    if (cfg_.retries < 0) throw ConfigError("retries must be >= 0");
}

Message OpenAiCompatibleProvider::complete(const CompletionRequest& req) {
    req.check();
    const std::string body = chat_request_body(cfg_.model, req);
    std::string last_error;
    for (int attempt_no = 0; attempt_no <= cfg_.retries; ++attempt_no) {
        if (attempt_no > 0) sleeper_(cfg_.backoff_base * (1 << (attempt_no - 1)));
        try {
            return attempt(body);
        } catch (const ProviderError& e) {
            const auto kind = e.kind();
            const bool transient = kind == ProviderError::Kind::transport ||
                                   kind == ProviderError::Kind::rate_limited ||
                                   (kind == ProviderError::Kind::bad_status && retryable_status(e.status()));
            if (!transient) throw;
            last_error = e.what();
        }
    }
    throw ProviderError(ProviderError::Kind::exhausted,
                        "gave up after " + std::to_string(cfg_.retries) + " retries; last: " + last_error);
}

Message OpenAiCompatibleProvider::attempt(const std::string& body) {
    using Kind = ProviderError::Kind;
    const auto url = net::split_url(cfg_.base_url);
    httplib::Client client(url.origin);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(cfg_.timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(cfg_.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());

    httplib::Headers headers;
    if (const char* key = std::getenv(cfg_.api_key_env.c_str()); key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    auto res = client.Post(url.path_prefix + "/v1/chat/completions", headers, body, "application/json");
    if (!res) throw ProviderError(Kind::transport, httplib::to_string(res.error()));
    if (res->status == 429) throw ProviderError(Kind::rate_limited, "HTTP 429", 429);
    if (res->status < 200 || res->status >= 300)
        throw ProviderError(Kind::bad_status, "HTTP " + std::to_string(res->status), res->status);
    return {Role::assistant, parse_chat_reply(res->body)};
}

}  // namespace evagent::provider
