#include "evagent/decision/types.hpp"

#include "evagent/model/json.hpp"

namespace evagent::decision {

void to_json(nlohmann::json& j, const CandidateSet& cs) {
    j = nlohmann::json{{"event_id", cs.event_id}, {"candidates", cs.candidates}, {"rationales", cs.rationales}};
}

void to_json(nlohmann::json& j, const Decision& d) {
    j = nlohmann::json{{"id", d.id},
                       {"event_id", d.event_id},
                       {"chosen", d.chosen},
                       {"candidate_count", d.candidate_count},
                       {"memory_version", d.memory_version},
                       {"decided_at", d.decided_at}};
}

void from_json(const nlohmann::json& j, Decision& d) {
    d.id = j.at("id").get<std::string>();
    d.event_id = j.at("event_id").get<std::string>();
    d.chosen = j.at("chosen").get<Action>();
    d.candidate_count = j.at("candidate_count").get<std::size_t>();
    d.memory_version = j.at("memory_version").get<std::uint64_t>();
    d.decided_at = j.at("decided_at").get<Timestamp>();
}

}  // namespace evagent::decision
