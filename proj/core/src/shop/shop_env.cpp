#include "evagent/shop/shop_env.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "evagent/memory/embedding.hpp"

namespace evagent::shop {

namespace {

std::string money(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "$%.2f", v);
    return buf;
}

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Name of the first option (in key order) offering `value`.
std::optional<std::string> option_for_value(const Product& p, const std::string& value) {
    for (const auto& [name, values] : p.options) {
        if (std::find(values.begin(), values.end(), value) != values.end()) return name;
    }
    return std::nullopt;
}

}  // namespace

std::string_view page_name(Page p) noexcept {
    switch (p) {
        case Page::search_home: return "search_home";
        case Page::results: return "results";
        case Page::product: return "product";
        case Page::done: return "done";
    }
    return "done";
}

std::size_t overlap_score(const std::string& query, const Product& p) {
    const auto q = memory::tokenize(query);
    std::set<std::string> doc;
    for (auto& t : memory::tokenize(p.title)) doc.insert(std::move(t));
    for (const auto& a : p.attributes) {
        for (auto& t : memory::tokenize(a)) doc.insert(std::move(t));
    }
    const std::set<std::string> distinct(q.begin(), q.end());
    return static_cast<std::size_t>(std::count_if(distinct.begin(), distinct.end(), [&](const auto& t) { return doc.contains(t); }));
}

std::vector<std::string> rank_products(const Catalog& catalog, const std::string& query, std::size_t top_k) {
    std::vector<std::pair<std::size_t, const Product*>> scored;
    for (const auto& p : catalog.products()) {
        if (auto s = overlap_score(query, p); s > 0) scored.emplace_back(s, &p);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second->id < b.second->id;
    });
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < scored.size() && i < top_k; ++i) ids.push_back(scored[i].second->id);
    return ids;
}

double reward(const Product& selected, const std::map<std::string, std::string>& chosen_options, const TaskSpec& spec) {
    std::size_t attr_hits = 0;
    for (const auto& a : spec.target_attributes) attr_hits += selected.attributes.contains(a) ? 1 : 0;
    std::size_t option_hits = 0;
    for (const auto& [name, value] : spec.target_options) {
        auto it = chosen_options.find(name);
        option_hits += (it != chosen_options.end() && it->second == value) ? 1 : 0;
    }
    const std::size_t price_ok = selected.price <= spec.price_cap ? 1 : 0;
    const double num = static_cast<double>(attr_hits + option_hits + price_ok);
    const double den = static_cast<double>(spec.target_attributes.size() + spec.target_options.size() + 1);
    return num / den;
}

ShopEnv::ShopEnv(Catalog catalog, ShopConfig cfg) : catalog_(std::move(catalog)), cfg_(cfg) {
    if (catalog_.empty()) throw ShopError(ShopError::Kind::empty_catalog, "catalog is empty");
    if (cfg_.step_cap == 0 || cfg_.top_k == 0) throw ShopError(ShopError::Kind::bad_data, "step cap and top_k must be positive");
}

Observation ShopEnv::reset(const TaskSpec& spec) {
    spec_ = spec;
    state_ = ShopState{};
    state_.step_cap = cfg_.step_cap;
    reward_.reset();
    return observe();
}

std::vector<ActionPattern> ShopEnv::available_actions() const {
    std::vector<ActionPattern> out;
    switch (state_.page) {
        case Page::search_home:
            out.push_back(ActionPattern::any(Verb::search));
            break;
        case Page::results:
            out.push_back(ActionPattern::any(Verb::search));
            for (const auto& id : state_.results) out.push_back(ActionPattern::exact(Action::click(id)));
            break;
        case Page::product: {
            out.push_back(ActionPattern::exact(Action::click("Buy Now")));
            const Product* p = catalog_.find(*state_.selected);
            std::set<std::string> seen;
            for (const auto& [name, values] : p->options) {
                for (const auto& v : values) {
                    if (seen.insert(v).second) out.push_back(ActionPattern::exact(Action::click(v)));
                }
            }
            out.push_back(ActionPattern::exact(Action::click("Back")));
            break;
        }
        case Page::done:
            break;
    }
    return out;
}

bool ShopEnv::accepts(const Action& a) const {
    if (state_.page == Page::done) return false;
    if (a.is_noop()) return true;
    const auto avail = available_actions();
    return std::any_of(avail.begin(), avail.end(), [&](const ActionPattern& p) { return p.matches(a); });
}

std::string ShopEnv::render_page() const {
    std::string out = "Instruction: " + spec_.instruction + "\n";
    switch (state_.page) {
        case Page::search_home:
            out += "[page: search_home]\nEnter a query with search[\"...\"].";
            break;
        case Page::results:
            out += "[page: results] query: " + quoted(state_.query);
            if (state_.results.empty()) out += "\n(no results)";
            for (std::size_t i = 0; i < state_.results.size(); ++i) {
                const Product* p = catalog_.find(state_.results[i]);
                out += "\n" + std::to_string(i + 1) + ". [" + p->id + "] " + p->title + " | " + money(p->price);
            }
            break;
        case Page::product: {
            const Product* p = catalog_.find(*state_.selected);
            out += "[page: product] [" + p->id + "] " + p->title + "\nprice: " + money(p->price) + "\nattributes: ";
            bool first = true;
            for (const auto& a : p->attributes) {
                out += (first ? "" : ", ") + a;
                first = false;
            }
            if (p->options.empty()) out += "\noptions: (none)";
            for (const auto& [name, values] : p->options) {
                out += "\noption " + name + ":";
                for (const auto& v : values) out += " " + quoted(v);
                if (auto it = state_.chosen_options.find(name); it != state_.chosen_options.end())
                    out += " (selected: " + quoted(it->second) + ")";
            }
            break;
        }
        case Page::done:
            if (state_.purchased) {
                out += "[page: done] purchased [" + *state_.purchased + "]";
            } else {
                out += "[page: done] step cap reached without a purchase";
            }
            out += "\nreward: " + fixed3(reward_.value_or(0.0));
            break;
    }
    return out;
}

Observation ShopEnv::observe() const { return Observation{render_page(), available_actions()}; }

StepResult ShopEnv::step(const Action& a) {
    if (state_.page == Page::done) throw ShopError(ShopError::Kind::episode_over, "episode is over");
    if (!accepts(a))
        throw ShopError(ShopError::Kind::illegal_action,
                        render_action(a) + " is not available on page " + std::string(page_name(state_.page)));

    StepResult r;
    ++state_.steps;
    switch (a.verb()) {
        case Verb::noop:
            r.summary = "noop";
            break;
        case Verb::search:
            state_.query = a.arg();
            state_.results = rank_products(catalog_, a.arg(), cfg_.top_k);
            state_.selected.reset();
            state_.chosen_options.clear();
            state_.page = Page::results;
            r.summary = "searched " + quoted(a.arg()) + ": " + std::to_string(state_.results.size()) + " results";
            break;
        case Verb::click:
            if (state_.page == Page::results) {
                state_.selected = a.arg();
                state_.chosen_options.clear();
                state_.page = Page::product;
                r.summary = "opened " + a.arg();
            } else if (a.arg() == "Back") {
                state_.page = Page::results;
                state_.selected.reset();
                state_.chosen_options.clear();
                r.summary = "back to results";
            } else if (a.arg() == "Buy Now") {
                const Product* p = catalog_.find(*state_.selected);
                reward_ = reward(*p, state_.chosen_options, spec_);
                state_.purchased = p->id;
                state_.page = Page::done;
                r.summary = "purchased " + p->id;
            } else {
                const Product* p = catalog_.find(*state_.selected);
                const auto name = option_for_value(*p, a.arg());
                state_.chosen_options[*name] = a.arg();
                r.summary = "selected " + *name + "=" + a.arg();
            }
            break;
    }
    if (state_.page != Page::done && state_.steps >= state_.step_cap) {
        reward_ = 0.0;
        state_.page = Page::done;
        r.summary += "; step cap reached";
    }
    r.done = state_.page == Page::done;
    r.reward = r.done ? reward_ : std::nullopt;
    r.observation = observe();
    return r;
}

}  // namespace evagent::shop
