#include "evagent/provider/provider.hpp"

#include <stdexcept>

namespace evagent::provider {

std::string_view role_name(Role r) noexcept {
    switch (r) {
        case Role::system: return "system";
        case Role::user: return "user";
        case Role::assistant: return "assistant";
    }
    return "user";
}

std::string_view ProviderError::kind_name(Kind k) noexcept {
    switch (k) {
        case Kind::transport: return "transport";
        case Kind::bad_status: return "bad_status";
        case Kind::malformed_reply: return "malformed_reply";
        case Kind::rate_limited: return "rate_limited";
        case Kind::exhausted: return "exhausted";
        case Kind::script_exhausted: return "script_exhausted";
    }
    return "transport";
}

void CompletionRequest::check() const {
    if (messages.empty() || messages.front().role != Role::system)
        throw std::invalid_argument("first message must be a system message");
    for (const auto& m : messages) {
        if (m.role != Role::assistant && m.content.empty())
            throw std::invalid_argument("system and user messages must be non-empty");
    }
    if (temperature < 0.0) throw std::invalid_argument("temperature must be >= 0");
}

const std::string& CompletionRequest::last_user_content() const {
    static const std::string empty;
    for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
        if (it->role == Role::user) return it->content;
    }
    return empty;
}

CompletionRequest make_request(std::string system_prompt, std::string user_content) {
    CompletionRequest req;
    req.messages.push_back({Role::system, std::move(system_prompt)});
    req.messages.push_back({Role::user, std::move(user_content)});
    return req;
}

void to_json(nlohmann::json& j, const Message& m) {
    j = nlohmann::json{{"role", std::string(role_name(m.role))}, {"content", m.content}};
}

}  // namespace evagent::provider
