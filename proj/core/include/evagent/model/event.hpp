#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/model/action.hpp"
#include "evagent/model/timestamp.hpp"

namespace evagent {

enum class Source { sensor, client, timer, feedback };

std::string_view source_name(Source s) noexcept;
// Throws SchemaError("source", ...) for unknown names.
Source source_from_name(std::string_view name);

// Hands out "<prefix>-<n>" identifiers, n starting at 1. Thread-safe.
class IdSequence {
public:
    explicit IdSequence(std::string prefix) : prefix_(std::move(prefix)) {}

    std::string next() { return prefix_ + "-" + std::to_string(counter_.fetch_add(1) + 1); }
    std::uint64_t issued() const noexcept { return counter_.load(); }

private:
    std::string prefix_;
    std::atomic<std::uint64_t> counter_{0};
};

struct Event {
    std::string id;
    Timestamp ts;
    Source source = Source::client;
    std::string intent;
    std::string instruction;
    std::vector<std::string> observations;
    // Empty means unconstrained.
    std::vector<ActionPattern> available_actions;
    std::map<std::string, std::string> context;

    // True when `a` is permitted by available_actions (noop always is).
    bool permits(const Action& a) const;

    friend bool operator==(const Event&, const Event&) = default;
};

struct Feedback {
    Action action;
    std::string outcome;
    bool success = true;
    Timestamp emitted_at;

    friend bool operator==(const Feedback&, const Feedback&) = default;
};

// Builds a well-formed Event from a decoded message. Required: "intent"
// (non-empty string). Optional: id, ts, source, instruction, observations,
// available_actions, context. Missing ids are drawn from `ids`.
// Throws SchemaError(field, reason).
Event validate_event(const nlohmann::json& raw, IdSequence& ids);

}  // namespace evagent
