#pragma once

// Canonical JSON encoding of the shared domain types. Field names are
// snake_case; actions and action patterns encode as their grammar strings.

#include <nlohmann/json.hpp>

#include "evagent/model/action.hpp"
#include "evagent/model/event.hpp"
#include "evagent/model/timestamp.hpp"

namespace evagent {

void to_json(nlohmann::json& j, const Timestamp& ts);
void from_json(const nlohmann::json& j, Timestamp& ts);

void to_json(nlohmann::json& j, const Action& a);
void from_json(const nlohmann::json& j, Action& a);

void to_json(nlohmann::json& j, const ActionPattern& p);
void from_json(const nlohmann::json& j, ActionPattern& p);

void to_json(nlohmann::json& j, const Event& e);

void to_json(nlohmann::json& j, const Feedback& f);
void from_json(const nlohmann::json& j, Feedback& f);

}  // namespace evagent
