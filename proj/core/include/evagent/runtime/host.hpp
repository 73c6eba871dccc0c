#pragma once

// Embedding surface for hosts without a filesystem or network (the browser
// build). The config text must inline its catalog and tasks, and must use
// the scripted provider with local memory.

#include <memory>
#include <string>
#include <string_view>

#include "evagent/runtime/runtime.hpp"

namespace evagent::runtime {

std::string_view version_string() noexcept;

class Host {
public:
    // Throws ConfigError.
    static std::unique_ptr<Host> init(std::string_view config_text);

    // Transcript text of one episode, byte-identical to the native
    // `run --provider scripted --transcript` output for the same config.
    std::string run_episode(const std::string& task_id);

private:
    explicit Host(RuntimeConfig cfg) : cfg_(std::move(cfg)) {}

    RuntimeConfig cfg_;
};

}  // namespace evagent::runtime

extern "C" {

// Returns nullptr on failure; evagent_host_last_error() says why.
void* evagent_host_init(const char* config_text);
// The returned text stays valid until the next call on the same handle.
const char* evagent_host_run_episode(void* handle, const char* task_id);
const char* evagent_host_version(void);
const char* evagent_host_last_error(void);
void evagent_host_free(void* handle);
}
