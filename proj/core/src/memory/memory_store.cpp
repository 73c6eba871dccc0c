#include "evagent/memory/memory_store.hpp"

namespace evagent::memory {

namespace {

// Cuts at most `limit` bytes without splitting a UTF-8 sequence.
std::string utf8_prefix(const std::string& s, std::size_t limit) {
    if (s.size() <= limit) return s;
    std::size_t end = limit;
    while (end > 0 && (static_cast<unsigned char>(s[end]) & 0xC0) == 0x80) --end;
    return s.substr(0, end);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const MemoryContext& c) {
    j = nlohmann::json{{"old_facts", c.old_facts}, {"short_term", c.short_term}, {"version", c.version}};
}

std::string summarize_event(const Event& e) {
    std::string out = "[";
    out += source_name(e.source);
    out += "] ";
    out += e.intent;
    out += " | obs: ";
    out += utf8_prefix(join(e.observations, " "), 200);
    return out;
}

std::string summarize_outcome(const Action& a, const Feedback& f) {
    return render_action(a) + " -> " + f.outcome;
}

std::string retrieval_query(const Event& e) {
    std::string q = e.intent;
    for (const auto& o : e.observations) {
        q += ' ';
        q += o;
    }
    return q;
}

}  // namespace evagent::memory
