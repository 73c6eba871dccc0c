#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evagent/model/event.hpp"
#include "evagent/model/timestamp.hpp"
#include "evagent/model/trace.hpp"
#include "evagent/provider/provider.hpp"

namespace evagent::events {

struct RawInput {
    Source source = Source::sensor;
    std::string payload;
    Timestamp received_at;
};

// Throws std::invalid_argument for an empty payload.
RawInput make_raw_input(Source source, std::string payload, Timestamp received_at = {});

struct GeneratorConfig {
    std::size_t k_max = 8;
    // When false, provider failures propagate instead of producing the
    // fallback event.
    bool fallback = true;
    std::string system_prompt;  // empty: built-in prompt
};

// Turns raw inputs into validated, timestamped Events through a reasoning
// provider. The provider must reply with a JSON array of event objects.
class EventGenerator {
public:
    EventGenerator(provider::ReasoningProvider& provider, Clock& clock, IdSequence& ids,
                   GeneratorConfig cfg = {}, TraceSink& trace = TraceSink::null());

    // Returns 1..k_max events. Invalid items are dropped and traced; if none
    // survive, a single event whose intent is the payload is returned.
    std::vector<Event> generate(const RawInput& raw);

    std::string user_message(const RawInput& raw) const;

private:
    Event fallback_event(const RawInput& raw, const std::string& why);

    provider::ReasoningProvider& provider_;
    Clock& clock_;
    IdSequence& ids_;
    GeneratorConfig cfg_;
    TraceSink& trace_;
};

}  // namespace evagent::events
