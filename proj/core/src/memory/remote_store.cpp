#include "evagent/memory/remote_store.hpp"

#include <httplib.h>

#include "evagent/model/json.hpp"
#include "evagent/net/url.hpp"

namespace evagent::memory {

namespace {

std::vector<std::string> text_list(const nlohmann::json& j, const char* field) {
    const auto& arr = j.at(field);
    if (!arr.is_array()) throw RemoteMemoryError(RemoteMemoryError::Kind::malformed_reply, std::string(field) + " is not an array");
    std::vector<std::string> out;
    for (const auto& t : arr) {
        if (!t.is_string())
            throw RemoteMemoryError(RemoteMemoryError::Kind::malformed_reply, std::string(field) + " holds a non-string");
        out.push_back(t.get<std::string>());
    }
    return out;
}

}  // namespace

MemoryContext parse_context_reply(const std::string& body) {
    using Kind = RemoteMemoryError::Kind;
    const auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw RemoteMemoryError(Kind::malformed_reply, "context reply is not a JSON object");
    try {
        MemoryContext ctx;
        ctx.old_facts = text_list(j, "old_facts");
        ctx.short_term = text_list(j, "short_term");
        ctx.version = j.at("version").get<std::uint64_t>();
        return ctx;
    } catch (const nlohmann::json::exception& e) {
        throw RemoteMemoryError(Kind::malformed_reply, std::string("bad context reply: ") + e.what());
    }
}

RemoteMemoryStore::RemoteMemoryStore(RemoteStoreConfig cfg, TraceSink& trace) : cfg_(std::move(cfg)), trace_(trace) {
    if (cfg_.base_url.empty()) throw ConfigError("remote memory requires base_url");
    net::split_url(cfg_.base_url);
}

std::string RemoteMemoryStore::post(const std::string& path, const std::string& body) {
    using Kind = RemoteMemoryError::Kind;
    const auto url = net::split_url(cfg_.base_url);
    httplib::Client client(url.origin);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(cfg_.timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(cfg_.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    auto res = client.Post(url.path_prefix + path, body, "application/json");
    if (!res) throw RemoteMemoryError(Kind::transport, "transport: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300)
        throw RemoteMemoryError(Kind::bad_status, "HTTP " + std::to_string(res->status), res->status);
    return res->body;
}

MemoryContext RemoteMemoryStore::fetch_context_remote(const Event& e) {
    nlohmann::json body = e;
    return parse_context_reply(post("/context", body.dump()));
}

MemoryContext RemoteMemoryStore::retrieve(const Event& e, RetrievalLimits limits) {
    try {
        MemoryContext ctx = fetch_context_remote(e);
        if (ctx.old_facts.size() > limits.k_old) ctx.old_facts.resize(limits.k_old);
        if (ctx.short_term.size() > limits.k_short) ctx.short_term.resize(limits.k_short);
        return ctx;
    } catch (const RemoteMemoryError& err) {
        if (!cfg_.fallback) throw;
        trace_.emit("memory.remote_fallback", {{"event_id", e.id}, {"error", err.what()}, {"status", err.status()}});
        MemoryContext empty;
        empty.version = version_.load();
        return empty;
    }
}

void RemoteMemoryStore::send_record(const char* kind, const std::string& text) {
    try {
        post("/memory", nlohmann::json{{"kind", kind}, {"text", text}, {"session", session_}}.dump());
    } catch (const RemoteMemoryError& err) {
        trace_.emit("memory.remote_write_failed", {{"error", err.what()}});
    }
}

std::uint64_t RemoteMemoryStore::record_event(const Event& e) {
    send_record("event", summarize_event(e));
    return ++version_;
}

std::uint64_t RemoteMemoryStore::record_outcome(const Action& a, const Feedback& f) {
    send_record("outcome", summarize_outcome(a, f));
    return ++version_;
}

}  // namespace evagent::memory
