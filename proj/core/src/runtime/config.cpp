#include "evagent/runtime/config.hpp"

#include <fstream>
#include <sstream>

#include "evagent/model/errors.hpp"

namespace evagent::runtime {

using nlohmann::json;

namespace {

template <typename T>
void read(const json& obj, const char* key, T& out, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return;
    try {
        out = it->get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config field '" + where + key + "' has the wrong type");
    }
}

const json& section(const json& j, const char* key) {
    static const json empty = json::object();
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return empty;
    if (!it->is_object()) throw ConfigError(std::string("config section '") + key + "' must be an object");
    return *it;
}

void require_positive(double v, const char* field) {
    if (!(v > 0)) throw ConfigError(std::string("config field '") + field + "' must be positive");
}

}  // namespace

std::filesystem::path RuntimeConfig::resolve(const std::string& path) const {
    std::filesystem::path p(path);
    return p.is_absolute() ? p : base_dir / p;
}

void RuntimeConfig::validate() const {
    require_positive(static_cast<double>(queue.capacity), "queue.capacity");
    require_positive(static_cast<double>(queue.ttl.count()), "queue.ttl_ms");
    if (candidate_cap != 5) throw ConfigError("config field 'candidate_cap' must be 5");
    require_positive(static_cast<double>(retrieval.k_old), "retrieval.k_old");
    require_positive(static_cast<double>(retrieval.k_short), "retrieval.k_short");
    require_positive(threshold, "retrieval.threshold");
    require_positive(static_cast<double>(dimension), "retrieval.dimension");
    require_positive(static_cast<double>(short_term_window), "retrieval.short_term_window");
    require_positive(static_cast<double>(k_max), "events.k_max");
    require_positive(static_cast<double>(noop_cutoff), "tasks.noop_cutoff");
    require_positive(static_cast<double>(shop.step_cap), "environment.step_cap");
    require_positive(static_cast<double>(shop.top_k), "environment.top_k");
    require_positive(static_cast<double>(max_cycles), "cadence.max_cycles");
    if (timer_interval.count() < 0) throw ConfigError("config field 'cadence.timer_interval_ms' must be >= 0");
    if (provider.kind != "scripted" && provider.kind != "remote")
        throw ConfigError("config field 'provider.kind' must be scripted or remote");
    if (provider.kind == "remote" && provider.remote.base_url.empty())
        throw ConfigError("config field 'provider.base_url' is required for the remote provider");
    if (provider.remote.retries < 0) throw ConfigError("config field 'provider.retries' must be >= 0");
    if (memory.kind != "local" && memory.kind != "remote")
        throw ConfigError("config field 'memory.kind' must be local or remote");
    if (memory.kind == "remote" && memory.remote.base_url.empty())
        throw ConfigError("config field 'memory.base_url' is required for remote memory");
    if (environment != "shopsim") throw ConfigError("config field 'environment.kind' must be shopsim");
    if (clock != "logical" && clock != "system") throw ConfigError("config field 'clock' must be logical or system");
    if (catalog_source.is_null()) throw ConfigError("config field 'environment.catalog' is required");
    if (tasks_source.is_null()) throw ConfigError("config field 'environment.tasks' is required");
    if (bench_policies.empty()) throw ConfigError("config field 'bench.policies' must not be empty");
}

RuntimeConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RuntimeConfig cfg;
    cfg.base_dir = base_dir;

    const auto& q = section(j, "queue");
    read(q, "capacity", cfg.queue.capacity, "queue.");
    std::int64_t ttl_ms = std::chrono::duration_cast<std::chrono::milliseconds>(cfg.queue.ttl).count();
    read(q, "ttl_ms", ttl_ms, "queue.");
    cfg.queue.ttl = std::chrono::milliseconds(ttl_ms);

    read(j, "candidate_cap", cfg.candidate_cap, "");

    const auto& r = section(j, "retrieval");
    read(r, "k_old", cfg.retrieval.k_old, "retrieval.");
    read(r, "k_short", cfg.retrieval.k_short, "retrieval.");
    read(r, "threshold", cfg.threshold, "retrieval.");
    read(r, "dimension", cfg.dimension, "retrieval.");
    read(r, "short_term_window", cfg.short_term_window, "retrieval.");

    const auto& p = section(j, "provider");
    read(p, "kind", cfg.provider.kind, "provider.");
    read(p, "script", cfg.provider.script, "provider.");
    read(p, "base_url", cfg.provider.remote.base_url, "provider.");
    read(p, "model", cfg.provider.remote.model, "provider.");
    read(p, "api_key_env", cfg.provider.remote.api_key_env, "provider.");
    read(p, "retries", cfg.provider.remote.retries, "provider.");
    std::int64_t provider_timeout = cfg.provider.remote.timeout.count();
    read(p, "timeout_ms", provider_timeout, "provider.");
    cfg.provider.remote.timeout = std::chrono::milliseconds(provider_timeout);
    std::int64_t backoff = cfg.provider.remote.backoff_base.count();
    read(p, "backoff_ms", backoff, "provider.");
    cfg.provider.remote.backoff_base = std::chrono::milliseconds(backoff);

    const auto& m = section(j, "memory");
    read(m, "kind", cfg.memory.kind, "memory.");
    read(m, "base_url", cfg.memory.remote.base_url, "memory.");
    read(m, "fallback", cfg.memory.remote.fallback, "memory.");
    read(m, "snapshot", cfg.memory.snapshot, "memory.");
    std::int64_t memory_timeout = cfg.memory.remote.timeout.count();
    read(m, "timeout_ms", memory_timeout, "memory.");
    cfg.memory.remote.timeout = std::chrono::milliseconds(memory_timeout);

    const auto& ev = section(j, "events");
    read(ev, "k_max", cfg.k_max, "events.");
    read(ev, "fallback", cfg.event_fallback, "events.");

    const auto& t = section(j, "tasks");
    read(t, "noop_cutoff", cfg.noop_cutoff, "tasks.");

    const auto& env = section(j, "environment");
    read(env, "kind", cfg.environment, "environment.");
    read(env, "step_cap", cfg.shop.step_cap, "environment.");
    read(env, "top_k", cfg.shop.top_k, "environment.");
    if (auto it = env.find("catalog"); it != env.end()) cfg.catalog_source = *it;
    if (auto it = env.find("tasks"); it != env.end()) cfg.tasks_source = *it;

    const auto& cad = section(j, "cadence");
    std::int64_t timer_ms = 0;
    read(cad, "timer_interval_ms", timer_ms, "cadence.");
    cfg.timer_interval = std::chrono::milliseconds(timer_ms);
    read(cad, "max_cycles", cfg.max_cycles, "cadence.");

    read(j, "clock", cfg.clock, "");
    read(j, "trace", cfg.trace_path, "");
    read(j, "seed", cfg.seed, "");

    const auto& b = section(j, "bench");
    read(b, "policies", cfg.bench_policies, "bench.");
    read(b, "shuffle", cfg.shuffle_tasks, "bench.");

    const auto& pr = section(j, "prompts");
    read(pr, "event_generator", cfg.event_prompt_path, "prompts.");
    read(pr, "candidate_generator", cfg.candidate_prompt_path, "prompts.");
    read(pr, "dispatcher", cfg.dispatch_prompt_path, "prompts.");

    cfg.validate();
    return cfg;
}

RuntimeConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    const json j = json::parse(in, nullptr, false, true);
    if (j.is_discarded()) throw ConfigError("config file '" + path.string() + "' is not valid JSON");
    return parse_config(j, path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

shop::Catalog load_catalog(const RuntimeConfig& cfg) {
    try {
        if (cfg.catalog_source.is_string()) return shop::load_catalog(cfg.resolve(cfg.catalog_source.get<std::string>()).string());
        if (cfg.catalog_source.is_array()) return shop::parse_catalog(cfg.catalog_source);
    } catch (const shop::ShopError& e) {
        throw ConfigError(std::string("catalog: ") + e.what());
    }
    throw ConfigError("environment.catalog must be a path or an array");
}

std::vector<shop::TaskSpec> load_task_specs(const RuntimeConfig& cfg) {
    try {
        if (cfg.tasks_source.is_string()) return shop::load_tasks(cfg.resolve(cfg.tasks_source.get<std::string>()).string());
        if (cfg.tasks_source.is_array()) return shop::parse_tasks(cfg.tasks_source);
    } catch (const shop::ShopError& e) {
        throw ConfigError(std::string("tasks: ") + e.what());
    }
    throw ConfigError("environment.tasks must be a path or an array");
}

std::string load_prompt(const RuntimeConfig& cfg, const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(cfg.resolve(path));
    if (!in) throw ConfigError("cannot read prompt '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace evagent::runtime
