#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/memory/embedding.hpp"
#include "evagent/model/event.hpp"

namespace evagent::memory {

enum class MemoryKind { old_fact, short_term };

struct MemoryItem {
    std::uint64_t id = 0;
    MemoryKind kind = MemoryKind::short_term;
    std::string text;
    Vector embedding;
    Timestamp stored_at;
    std::string session;
};

// The model description handed to the decision engine.
struct MemoryContext {
    std::vector<std::string> old_facts;
    std::vector<std::string> short_term;
    std::uint64_t version = 0;

    friend bool operator==(const MemoryContext&, const MemoryContext&) = default;
};

void to_json(nlohmann::json& j, const MemoryContext& c);

struct RetrievalLimits {
    std::size_t k_old = 4;
    std::size_t k_short = 8;
};

// "[source] intent | obs: <first 200 bytes of the joined observations>"
std::string summarize_event(const Event& e);
// "<rendered action> -> <outcome>"
std::string summarize_outcome(const Action& a, const Feedback& f);
// intent followed by the observations, space separated.
std::string retrieval_query(const Event& e);

// Retrieval-augmented memory. Every record_* call bumps the version by
// exactly one; nothing else changes it.
class MemoryStore {
public:
    virtual ~MemoryStore() = default;

    virtual std::uint64_t record_event(const Event& e) = 0;
    virtual std::uint64_t record_outcome(const Action& a, const Feedback& f) = 0;
    virtual MemoryContext retrieve(const Event& e, RetrievalLimits limits) = 0;
    virtual std::uint64_t version() const = 0;

    // Starts a new session; short-term items of earlier sessions become old
    // facts.
    virtual void begin_session(const std::string& session) = 0;
};

}  // namespace evagent::memory
