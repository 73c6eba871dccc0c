#include "evagent/model/json.hpp"

#include "evagent/model/errors.hpp"

namespace evagent {

using nlohmann::json;

void to_json(json& j, const Timestamp& ts) {
    j = json{{"wall_nanos", ts.wall_nanos}, {"seq", ts.seq}};
}

void from_json(const json& j, Timestamp& ts) {
    ts.wall_nanos = j.at("wall_nanos").get<std::int64_t>();
    ts.seq = j.at("seq").get<std::uint64_t>();
}

void to_json(json& j, const Action& a) { j = render_action(a); }

void from_json(const json& j, Action& a) { a = parse_action(j.get<std::string>()); }

void to_json(json& j, const ActionPattern& p) { j = render_pattern(p); }

void from_json(const json& j, ActionPattern& p) { p = parse_pattern(j.get<std::string>()); }

void to_json(json& j, const Event& e) {
    j = json{{"id", e.id},
             {"ts", e.ts},
             {"source", std::string(source_name(e.source))},
             {"intent", e.intent},
             {"instruction", e.instruction},
             {"observations", e.observations},
             {"available_actions", e.available_actions},
             {"context", e.context}};
}

void to_json(json& j, const Feedback& f) {
    j = json{{"action", f.action}, {"outcome", f.outcome}, {"success", f.success}, {"emitted_at", f.emitted_at}};
}

void from_json(const json& j, Feedback& f) {
    f.action = j.at("action").get<Action>();
    f.outcome = j.at("outcome").get<std::string>();
    f.success = j.at("success").get<bool>();
    f.emitted_at = j.at("emitted_at").get<Timestamp>();
}

}  // namespace evagent
