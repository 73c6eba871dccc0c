#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "evagent/decision/types.hpp"
#include "evagent/events/event_queue.hpp"
#include "evagent/memory/memory_store.hpp"
#include "evagent/model/event.hpp"
#include "evagent/model/trace.hpp"
#include "evagent/provider/provider.hpp"

namespace evagent::decision {

// Parses a candidate-generation reply (a JSON array of action strings or of
// {"action","rationale"} objects) and keeps, in reply order, the first five
// entries that parse and that the event permits. Rejections are traced.
CandidateSet filter_candidates(const std::string& reply, const Event& e, TraceSink& trace = TraceSink::null());

// Dispatcher reply: a 1-based candidate index or the literal `noop`.
// Returns the 0-based index, or nullopt for noop. Throws ParseError for
// anything else, including out-of-range indices.
std::optional<std::size_t> parse_dispatch_reply(const std::string& reply, std::size_t candidate_count);

struct SelectorConfig {
    std::string candidate_prompt;  // empty: built-in
    std::string dispatch_prompt;   // empty: built-in
    memory::RetrievalLimits limits;
};

// One decision cycle's worth of results.
struct Cycle {
    Event event;
    memory::MemoryContext memory;
    CandidateSet candidates;
    Decision decision;
    // Candidate generation failed; the event went back to the queue (once).
    bool generation_failed = false;
};

// Two-stage action selector: candidate generation proposes up to five
// actions for the newest event, then the dispatcher commits to exactly one
// of them or noop.
class ActionSelector {
public:
    ActionSelector(provider::ReasoningProvider& provider, memory::MemoryStore& memory, Clock& clock,
                   IdSequence& decision_ids, SelectorConfig cfg = {}, TraceSink& trace = TraceSink::null());

    // Throws ProviderError when the provider call itself fails.
    CandidateSet generate_candidates(const Event& e, const memory::MemoryContext& ctx, std::span<const Event> peers,
                                     const std::vector<std::string>& tasks);

    // Never throws for provider problems: failures and out-of-set replies
    // become noop.
    Decision dispatch(const CandidateSet& cs, const Event& e, const memory::MemoryContext& ctx,
                      const std::vector<std::string>& tasks);

    // pop_latest, retrieve, generate, dispatch. nullopt when the queue has
    // no live event.
    std::optional<Cycle> select_action(events::EventQueue& queue, std::int64_t now_nanos,
                                       const std::vector<std::string>& tasks = {});

    std::string candidate_message(const Event& e, const memory::MemoryContext& ctx, std::span<const Event> peers,
                                  const std::vector<std::string>& tasks) const;
    std::string dispatch_message(const CandidateSet& cs, const Event& e, const memory::MemoryContext& ctx,
                                 const std::vector<std::string>& tasks) const;

private:
    Decision make_decision(const Event& e, const Action& chosen, std::size_t count, std::uint64_t version);

    provider::ReasoningProvider& provider_;
    memory::MemoryStore& memory_;
    Clock& clock_;
    IdSequence& decision_ids_;
    SelectorConfig cfg_;
    TraceSink& trace_;
    std::set<std::string> readmitted_;
};

}  // namespace evagent::decision
