#include "evagent/events/event_generator.hpp"

#include <stdexcept>

#include "evagent/model/errors.hpp"
#include "evagent/prompts/prompts.hpp"

namespace evagent::events {

using nlohmann::json;
using prompts::Stage;

RawInput make_raw_input(Source source, std::string payload, Timestamp received_at) {
    if (payload.empty()) throw std::invalid_argument("raw input payload must be non-empty");
    return RawInput{source, std::move(payload), received_at};
}

EventGenerator::EventGenerator(provider::ReasoningProvider& provider, Clock& clock, IdSequence& ids,
                               GeneratorConfig cfg, TraceSink& trace)
    : provider_(provider), clock_(clock), ids_(ids), cfg_(std::move(cfg)), trace_(trace) {
    if (cfg_.k_max < 1) throw ConfigError("k_max must be at least 1");
    if (cfg_.system_prompt.empty())
        cfg_.system_prompt = std::string(prompts::default_system_prompt(Stage::event_generation));
}

std::string EventGenerator::user_message(const RawInput& raw) const {
    std::string msg(prompts::stage_tag(Stage::event_generation));
    msg += "\nsource: ";
    msg += source_name(raw.source);
    msg += "\nraw input:\n";
    msg += raw.payload;
    return msg;
}

std::vector<Event> EventGenerator::generate(const RawInput& raw) {
    std::string reply;
    try {
        reply = provider_.complete(provider::make_request(cfg_.system_prompt, user_message(raw))).content;
    } catch (const provider::ProviderError& e) {
        if (!cfg_.fallback) throw;
        trace_.emit("events.provider_error", {{"error", e.what()}});
        return {fallback_event(raw, e.what())};
    }

    const json items = json::parse(prompts::strip_code_fence(reply), nullptr, false);
    if (!items.is_array()) {
        if (!cfg_.fallback)
            throw provider::ProviderError(provider::ProviderError::Kind::malformed_reply,
                                          "event generator reply is not a JSON array");
        trace_.emit("events.malformed_reply", {{"reply", reply}});
        return {fallback_event(raw, "reply is not a JSON array")};
    }

    std::vector<Event> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (out.size() == cfg_.k_max) {
            trace_.emit("events.truncated", {{"dropped", items.size() - i}, {"k_max", cfg_.k_max}});
            break;
        }
        json item = items[i];
        if (!item.is_object()) {
            trace_.emit("events.dropped_item", {{"index", i}, {"reason", "not an object"}});
            continue;
        }
        // Identity and time belong to the runtime, not the provider.
        item.erase("id");
        item.erase("ts");
        item["source"] = std::string(source_name(raw.source));
        try {
            Event e = validate_event(item, ids_);
            e.ts.wall_nanos = clock_.now_nanos();
            out.push_back(std::move(e));
        } catch (const SchemaError& err) {
            trace_.emit("events.dropped_item", {{"index", i}, {"field", err.field()}, {"reason", err.reason()}});
        }
    }

    if (out.empty()) {
        if (!cfg_.fallback)
            throw provider::ProviderError(provider::ProviderError::Kind::malformed_reply,
                                          "event generator reply has no valid events");
        return {fallback_event(raw, "no valid items")};
    }
    return out;
}

Event EventGenerator::fallback_event(const RawInput& raw, const std::string& why) {
    Event e;
    e.id = ids_.next();
    e.ts.wall_nanos = clock_.now_nanos();
    e.source = raw.source;
    e.intent = raw.payload;
    e.context["fallback"] = "true";
    trace_.emit("events.fallback", {{"event_id", e.id}, {"reason", why}});
    return e;
}

}  // namespace evagent::events
