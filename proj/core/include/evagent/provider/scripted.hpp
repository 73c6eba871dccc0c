#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/provider/provider.hpp"

namespace evagent::provider {

struct ScriptEntry {
    // Substring looked up in the last user message. Empty matches anything.
    std::string match;
    std::string reply;
    // One-shot entries are consumed by their first match.
    bool once = false;
};

struct Script {
    std::vector<ScriptEntry> entries;
    std::optional<std::string> fallback_reply;
};

// Script file form: {"entries":[{"match":..,"reply":..,"once":bool}], "default": ..}
Script script_from_json(const nlohmann::json& j);
nlohmann::json script_to_json(const Script& s);

// Deterministic test double: answers from an ordered list of
// (substring matcher, reply) pairs.
class ScriptedProvider final : public ReasoningProvider {
public:
    explicit ScriptedProvider(Script script) : script_(std::move(script)) {}

    Message complete(const CompletionRequest& req) override;

    std::size_t calls() const;
    std::size_t remaining_entries() const;

private:
    mutable std::mutex mu_;
    Script script_;
    std::size_t calls_ = 0;
};

// Returns the reply of the first matching entry, erasing it if one-shot.
// Throws ProviderError(script_exhausted) when nothing matches and there is
// no default.
std::string scripted_next(Script& script, const CompletionRequest& req);

}  // namespace evagent::provider
