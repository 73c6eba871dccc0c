#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evagent/provider/scripted.hpp"
#include "evagent/runtime/config.hpp"
#include "evagent/shop/catalog.hpp"
#include "evagent/shop/shop_env.hpp"

namespace evagent::runtime {

// Best achievable purchase for a task: the product (and option choices)
// with the highest reward; ties go to the lower product id.
struct TargetChoice {
    const shop::Product* product = nullptr;
    std::map<std::string, std::string> options;
    double reward = 0.0;
};

TargetChoice best_target(const shop::TaskSpec& spec, const shop::Catalog& catalog);

// Action sequence reaching the best target: search its title, open it,
// pick the target options it offers, buy. Throws ConfigError when the
// target does not show up in the search results.
std::vector<Action> optimal_plan(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg);

// Plan formed once from the instruction alone: search the instruction,
// open the top result, buy.
std::vector<Action> single_shot_plan(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg);

// Script that drives the event-driven loop along optimal_plan. Every stage
// reply is derived from the page the agent is looking at.
provider::Script optimal_script(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg);

// Script that replays single_shot_plan regardless of what the environment
// shows, then proposes nothing.
provider::Script single_shot_script(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg);

// Empty script without a default: every call fails.
provider::Script failing_script();

// Resolves a policy name or script file path.
provider::Script build_script(std::string_view policy, const shop::TaskSpec& spec, const shop::Catalog& catalog,
                              const RuntimeConfig& cfg);

// Human-readable label for bench tables.
std::string policy_label(std::string_view policy);

}  // namespace evagent::runtime
