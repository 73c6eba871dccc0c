#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/model/errors.hpp"

namespace evagent::provider {

enum class Role { system, user, assistant };

std::string_view role_name(Role r) noexcept;

struct Message {
    Role role = Role::user;
    std::string content;

    friend bool operator==(const Message&, const Message&) = default;
};

struct CompletionRequest {
    std::vector<Message> messages;
    double temperature = 0.0;
    int max_output = 512;

    // Throws std::invalid_argument unless the first message is a system
    // message and every system/user message is non-empty.
    void check() const;

    // Content of the last user message, or empty.
    const std::string& last_user_content() const;
};

// Convenience: system prompt followed by one user turn.
CompletionRequest make_request(std::string system_prompt, std::string user_content);

class ProviderError : public Error {
public:
    enum class Kind { transport, bad_status, malformed_reply, rate_limited, exhausted, script_exhausted };

    ProviderError(Kind kind, std::string detail, int status = 0)
        : Error(std::string(kind_name(kind)) + ": " + detail), kind_(kind), status_(status) {}

    Kind kind() const noexcept { return kind_; }
    int status() const noexcept { return status_; }

    static std::string_view kind_name(Kind k) noexcept;

private:
    Kind kind_;
    int status_;
};

// A reasoning backend. Implementations are shareable and must tolerate
// concurrent complete() calls.
class ReasoningProvider {
public:
    virtual ~ReasoningProvider() = default;

    // Returns the assistant reply; throws ProviderError.
    virtual Message complete(const CompletionRequest& req) = 0;
};

void to_json(nlohmann::json& j, const Message& m);

}  // namespace evagent::provider
