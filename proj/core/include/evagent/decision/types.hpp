#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/model/action.hpp"
#include "evagent/model/timestamp.hpp"

namespace evagent::decision {

inline constexpr std::size_t kMaxCandidates = 5;

struct CandidateSet {
    std::string event_id;
    std::vector<Action> candidates;
    std::vector<std::string> rationales;  // parallel to candidates

    friend bool operator==(const CandidateSet&, const CandidateSet&) = default;
};

struct Decision {
    std::string id;
    std::string event_id;
    Action chosen;
    std::size_t candidate_count = 0;
    std::uint64_t memory_version = 0;
    Timestamp decided_at;

    friend bool operator==(const Decision&, const Decision&) = default;
};

void to_json(nlohmann::json& j, const CandidateSet& cs);
void to_json(nlohmann::json& j, const Decision& d);
void from_json(const nlohmann::json& j, Decision& d);

}  // namespace evagent::decision
