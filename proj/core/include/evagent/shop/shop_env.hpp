#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evagent/model/action.hpp"
#include "evagent/shop/catalog.hpp"

namespace evagent::shop {

enum class Page { search_home, results, product, done };

std::string_view page_name(Page p) noexcept;

struct ShopConfig {
    std::size_t step_cap = 15;
    std::size_t top_k = 5;
};

struct ShopState {
    Page page = Page::search_home;
    std::string query;
    std::vector<std::string> results;
    std::optional<std::string> selected;
    std::map<std::string, std::string> chosen_options;
    std::size_t steps = 0;
    std::size_t step_cap = 15;
    std::optional<std::string> purchased;
};

struct Observation {
    std::string text;
    std::vector<ActionPattern> available;
};

struct StepResult {
    Observation observation;
    bool done = false;
    std::optional<double> reward;
    // One-line description of what the action did.
    std::string summary;
};

// |distinct query tokens that appear in title or attributes|.
std::size_t overlap_score(const std::string& query, const Product& p);

// Ids of the products with a positive score, best first, ties by id, at
// most top_k.
std::vector<std::string> rank_products(const Catalog& catalog, const std::string& query, std::size_t top_k);

// (|attrs ∩ targets| + |matching option pairs| + price_ok) /
// (|targets| + |target options| + 1).
double reward(const Product& selected, const std::map<std::string, std::string>& chosen_options, const TaskSpec& spec);

// Deterministic web-shop environment:
//   search_home/results + search[q]   -> results
//   results + click[product id]       -> product
//   product + click[option value]     -> option selected
//   product + click["Back"]           -> results
//   product + click["Buy Now"]        -> done, reward
//   any + noop                        -> unchanged
// Every accepted action is a step; reaching the step cap ends the episode
// with reward 0.
class ShopEnv {
public:
    explicit ShopEnv(Catalog catalog, ShopConfig cfg = {});

    Observation reset(const TaskSpec& spec);
    // Throws ShopError(illegal_action) or ShopError(episode_over).
    StepResult step(const Action& a);

    Observation observe() const;
    std::vector<ActionPattern> available_actions() const;
    bool accepts(const Action& a) const;

    const ShopState& state() const noexcept { return state_; }
    const TaskSpec& task() const noexcept { return spec_; }
    const Catalog& catalog() const noexcept { return catalog_; }
    bool done() const noexcept { return state_.page == Page::done; }
    std::optional<double> final_reward() const noexcept { return reward_; }

private:
    std::string render_page() const;

    Catalog catalog_;
    ShopConfig cfg_;
    TaskSpec spec_;
    ShopState state_;
    std::optional<double> reward_;
};

}  // namespace evagent::shop
