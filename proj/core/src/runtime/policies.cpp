#include "evagent/runtime/policies.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "evagent/model/json.hpp"
#include "evagent/prompts/prompts.hpp"

namespace evagent::runtime {

using nlohmann::json;
using prompts::Stage;

namespace {

std::string tag(Stage s) { return std::string(prompts::stage_tag(s)); }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const auto line = text.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
        if (!line.empty()) out.push_back(line);
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return out;
}

std::string event_reply(const shop::TaskSpec& spec, const shop::Observation& obs) {
    json item{{"intent", spec.instruction},
              {"instruction", spec.instruction},
              {"observations", lines_of(obs.text)},
              {"available_actions", obs.available}};
    return json::array({item}).dump();
}

}  // namespace

TargetChoice best_target(const shop::TaskSpec& spec, const shop::Catalog& catalog) {
    TargetChoice best;
    std::vector<const shop::Product*> ordered;
    for (const auto& p : catalog.products()) ordered.push_back(&p);
    std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* p : ordered) {
        std::map<std::string, std::string> chosen;
        for (const auto& [name, value] : spec.target_options) {
            auto it = p->options.find(name);
            if (it != p->options.end() && std::find(it->second.begin(), it->second.end(), value) != it->second.end())
                chosen[name] = value;
        }
        const double r = shop::reward(*p, chosen, spec);
        if (!best.product || r > best.reward) best = TargetChoice{p, std::move(chosen), r};
    }
    return best;
}

std::vector<Action> optimal_plan(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg) {
    const auto target = best_target(spec, catalog);
    const auto results = shop::rank_products(catalog, target.product->title, cfg.top_k);
    if (std::find(results.begin(), results.end(), target.product->id) == results.end())
        throw ConfigError("task " + spec.id + ": target " + target.product->id + " is not found by searching its title");
    std::vector<Action> plan{Action::search(target.product->title), Action::click(target.product->id)};
    for (const auto& [name, value] : target.options) plan.push_back(Action::click(value));
    plan.push_back(Action::click("Buy Now"));
    return plan;
}

std::vector<Action> single_shot_plan(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg) {
    std::vector<Action> plan{Action::search(spec.instruction)};
    const auto results = shop::rank_products(catalog, spec.instruction, cfg.top_k);
    if (!results.empty()) {
        plan.push_back(Action::click(results.front()));
        plan.push_back(Action::click("Buy Now"));
    }
    return plan;
}

provider::Script optimal_script(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg) {
    const auto plan = optimal_plan(spec, catalog, cfg);
    shop::ShopEnv sim(catalog, cfg);
    shop::Observation obs = sim.reset(spec);

    provider::Script script;
    for (const auto& action : plan) {
        script.entries.push_back({tag(Stage::event_generation), event_reply(spec, obs), true});

        // Offer one permitted alternative so the dispatcher has a real choice.
        json candidates = json::array({{{"action", render_action(action)}, {"rationale", "moves toward the target product"}}});
        for (const auto& p : obs.available) {
            if (p.is_wildcard() || p.action() == action) continue;
            candidates.push_back({{"action", render_pattern(p)}, {"rationale", "alternative on this page"}});
            break;
        }
        script.entries.push_back({tag(Stage::candidate_generation), candidates.dump(), true});
        script.entries.push_back({tag(Stage::dispatch), "1", true});
        obs = sim.step(action).observation;
    }
    // Feedback of the purchase still passes through the event generator.
    script.entries.push_back({tag(Stage::event_generation), event_reply(spec, obs), true});
    return script;
}

provider::Script single_shot_script(const shop::TaskSpec& spec, const shop::Catalog& catalog, const shop::ShopConfig& cfg) {
    provider::Script script;
    script.entries.push_back(
        {tag(Stage::event_generation), json::array({{{"intent", spec.instruction}, {"instruction", spec.instruction}}}).dump(), false});
    for (const auto& action : single_shot_plan(spec, catalog, cfg)) {
        script.entries.push_back(
            {tag(Stage::candidate_generation), json::array({{{"action", render_action(action)}, {"rationale", "planned at reset"}}}).dump(), true});
    }
    script.entries.push_back({tag(Stage::candidate_generation), "[]", false});
    script.entries.push_back({tag(Stage::dispatch), "1", false});
    return script;
}

provider::Script failing_script() { return provider::Script{}; }

provider::Script build_script(std::string_view policy, const shop::TaskSpec& spec, const shop::Catalog& catalog,
                              const RuntimeConfig& cfg) {
    if (policy == "optimal") return optimal_script(spec, catalog, cfg.shop);
    if (policy == "single_shot") return single_shot_script(spec, catalog, cfg.shop);
    if (policy == "failing") return failing_script();
    std::ifstream in(cfg.resolve(std::string(policy)));
    if (!in) throw ConfigError("unknown script policy or unreadable script file '" + std::string(policy) + "'");
    const json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ConfigError("script file '" + std::string(policy) + "' is not a JSON object");
    try {
        return provider::script_from_json(j);
    } catch (const json::exception& e) {
        throw ConfigError("script file '" + std::string(policy) + "': " + e.what());
    }
}

std::string policy_label(std::string_view policy) {
    if (policy == "optimal") return "event-driven loop (optimal script)";
    if (policy == "single_shot") return "single-shot plan (baseline)";
    if (policy == "failing") return "always-failing provider";
    if (policy == "remote") return "event-driven loop (remote provider)";
    return "script " + std::string(policy);
}

}  // namespace evagent::runtime
