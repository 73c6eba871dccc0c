#include "evagent/model/event.hpp"

#include <algorithm>

#include "evagent/model/errors.hpp"

namespace evagent {

namespace {

using nlohmann::json;

std::string optional_string(const json& raw, const char* field) {
    auto it = raw.find(field);
    if (it == raw.end() || it->is_null()) return {};
    if (!it->is_string()) throw SchemaError(field, "expected string");
    return it->get<std::string>();
}

std::vector<std::string> string_list(const json& raw, const char* field) {
    std::vector<std::string> out;
    auto it = raw.find(field);
    if (it == raw.end() || it->is_null()) return out;
    if (!it->is_array()) throw SchemaError(field, "expected array of strings");
    for (const auto& item : *it) {
        if (!item.is_string()) throw SchemaError(field, "expected array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

std::string_view source_name(Source s) noexcept {
    switch (s) {
        case Source::sensor: return "sensor";
        case Source::client: return "client";
        case Source::timer: return "timer";
        case Source::feedback: return "feedback";
    }
    return "client";
}

Source source_from_name(std::string_view name) {
    if (name == "sensor") return Source::sensor;
    if (name == "client") return Source::client;
    if (name == "timer") return Source::timer;
    if (name == "feedback") return Source::feedback;
    throw SchemaError("source", "unknown source '" + std::string(name) + "'");
}

bool Event::permits(const Action& a) const {
    if (a.is_noop() || available_actions.empty()) return true;
    return std::any_of(available_actions.begin(), available_actions.end(),
                       [&](const ActionPattern& p) { return p.matches(a); });
}

Event validate_event(const json& raw, IdSequence& ids) {
    if (!raw.is_object()) throw SchemaError("event", "expected object");

    Event e;
    e.intent = optional_string(raw, "intent");
    if (e.intent.empty()) throw SchemaError("intent", "required");

    e.id = optional_string(raw, "id");
    if (e.id.empty()) e.id = ids.next();

    if (auto it = raw.find("ts"); it != raw.end() && !it->is_null()) {
        if (!it->is_object()) throw SchemaError("ts", "expected object");
        try {
            e.ts.wall_nanos = it->value("wall_nanos", std::int64_t{0});
            e.ts.seq = it->value("seq", std::uint64_t{0});
        } catch (const json::exception&) {
            throw SchemaError("ts", "expected integer wall_nanos and seq");
        }
    }

    if (auto src = optional_string(raw, "source"); !src.empty()) e.source = source_from_name(src);

    e.instruction = optional_string(raw, "instruction");
    e.observations = string_list(raw, "observations");

    const auto patterns = string_list(raw, "available_actions");
    e.available_actions.reserve(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        try {
            e.available_actions.push_back(parse_pattern(patterns[i]));
        } catch (const ParseError& err) {
            throw SchemaError("available_actions",
                              "entry " + std::to_string(i) + " '" + patterns[i] + "': " + err.what());
        }
    }

    if (auto it = raw.find("context"); it != raw.end() && !it->is_null()) {
        if (!it->is_object()) throw SchemaError("context", "expected object");
        for (const auto& [key, value] : it->items()) {
            if (value.is_string()) {
                e.context[key] = value.get<std::string>();
            } else if (value.is_primitive()) {
                e.context[key] = value.dump();
            } else {
                throw SchemaError("context", "value of '" + key + "' is not text");
            }
        }
    }
    return e;
}

}  // namespace evagent
