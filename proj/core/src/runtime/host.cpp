#include "evagent/runtime/host.hpp"

#include <sstream>

#include "evagent/model/errors.hpp"

#ifndef EVAGENT_VERSION_STRING
#define EVAGENT_VERSION_STRING "0.0.0"
#endif

namespace evagent::runtime {

std::string_view version_string() noexcept { return EVAGENT_VERSION_STRING; }

std::unique_ptr<Host> Host::init(std::string_view config_text) {
    const auto j = nlohmann::json::parse(config_text, nullptr, false, true);
    if (j.is_discarded()) throw ConfigError("host config is not valid JSON");
    RuntimeConfig cfg = parse_config(j);
    if (cfg.provider.kind != "scripted") throw ConfigError("host builds support the scripted provider only");
    if (cfg.memory.kind != "local") throw ConfigError("host builds support local memory only");
    if (!cfg.trace_path.empty() || !cfg.memory.snapshot.empty())
        throw ConfigError("host builds cannot write trace or snapshot files");
    return std::unique_ptr<Host>(new Host(std::move(cfg)));
}

std::string Host::run_episode(const std::string& task_id) {
    const auto specs = load_task_specs(cfg_);
    for (const auto& spec : specs) {
        if (spec.id != task_id) continue;
        Runtime rt(cfg_);
        std::ostringstream transcript;
        rt.run_episode(spec, &transcript);
        return transcript.str();
    }
    throw ConfigError("unknown task '" + task_id + "'");
}

}  // namespace evagent::runtime

namespace {

thread_local std::string g_last_error;

struct HostHandle {
    std::unique_ptr<evagent::runtime::Host> host;
    std::string last_transcript;
};

}  // namespace

extern "C" {

void* evagent_host_init(const char* config_text) {
    try {
        auto handle = std::make_unique<HostHandle>();
        handle->host = evagent::runtime::Host::init(config_text ? config_text : "");
        return handle.release();
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

const char* evagent_host_run_episode(void* handle, const char* task_id) {
    if (!handle || !task_id) {
        g_last_error = "null handle or task id";
        return nullptr;
    }
    auto* h = static_cast<HostHandle*>(handle);
    try {
        h->last_transcript = h->host->run_episode(task_id);
        return h->last_transcript.c_str();
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

const char* evagent_host_version(void) { return EVAGENT_VERSION_STRING; }

const char* evagent_host_last_error(void) { return g_last_error.c_str(); }

void evagent_host_free(void* handle) { delete static_cast<HostHandle*>(handle); }
}
