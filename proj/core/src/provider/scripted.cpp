#include "evagent/provider/scripted.hpp"

namespace evagent::provider {

Script script_from_json(const nlohmann::json& j) {
    Script s;
    for (const auto& e : j.value("entries", nlohmann::json::array())) {
        s.entries.push_back({e.value("match", ""), e.at("reply").get<std::string>(), e.value("once", false)});
    }
    if (auto it = j.find("default"); it != j.end() && !it->is_null()) s.fallback_reply = it->get<std::string>();
    return s;
}

nlohmann::json script_to_json(const Script& s) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : s.entries) entries.push_back({{"match", e.match}, {"reply", e.reply}, {"once", e.once}});
    nlohmann::json j{{"entries", entries}};
    j["default"] = s.fallback_reply ? nlohmann::json(*s.fallback_reply) : nlohmann::json(nullptr);
    return j;
}

std::string scripted_next(Script& script, const CompletionRequest& req) {
    const std::string& text = req.last_user_content();
    for (auto it = script.entries.begin(); it != script.entries.end(); ++it) {
        if (text.find(it->match) == std::string::npos) continue;
        std::string reply = it->reply;
        if (it->once) script.entries.erase(it);
        return reply;
    }
    if (script.fallback_reply) return *script.fallback_reply;
    throw ProviderError(ProviderError::Kind::script_exhausted, "no script entry matches the request");
}

Message ScriptedProvider::complete(const CompletionRequest& req) {
    std::lock_guard lock(mu_);
    ++calls_;
    return {Role::assistant, scripted_next(script_, req)};
}

std::size_t ScriptedProvider::calls() const {
    std::lock_guard lock(mu_);
    return calls_;
}

std::size_t ScriptedProvider::remaining_entries() const {
    std::lock_guard lock(mu_);
    return script_.entries.size();
}

}  // namespace evagent::provider
