#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/events/event_queue.hpp"
#include "evagent/memory/local_store.hpp"
#include "evagent/memory/memory_store.hpp"
#include "evagent/memory/remote_store.hpp"
#include "evagent/provider/openai_client.hpp"
#include "evagent/shop/catalog.hpp"
#include "evagent/shop/shop_env.hpp"

namespace evagent::runtime {

struct ProviderSettings {
    std::string kind = "scripted";  // scripted | remote
    // Built-in policy (optimal, single_shot, failing) or a script file.
    std::string script = "optimal";
    provider::RemoteProviderConfig remote;
};

struct MemorySettings {
    std::string kind = "local";  // local | remote
    memory::RemoteStoreConfig remote;
    // Optional line-delimited JSON snapshot, loaded on start and written on
    // shutdown.
    std::string snapshot;
};

struct RuntimeConfig {
    events::QueueConfig queue;
    std::size_t candidate_cap = 5;

    memory::RetrievalLimits retrieval;
    double threshold = 0.1;
    std::size_t dimension = memory::kDefaultDimension;
    std::size_t short_term_window = 32;

    ProviderSettings provider;
    MemorySettings memory;

    std::size_t k_max = 8;
    bool event_fallback = true;
    std::size_t noop_cutoff = 3;

    // Environment binding; only "shopsim" exists.
    std::string environment = "shopsim";
    shop::ShopConfig shop;
    // Each is a path to a .jsonl file or an inline array.
    nlohmann::json catalog_source;
    nlohmann::json tasks_source;

    std::chrono::milliseconds timer_interval{0};  // 0 disables the timer
    std::size_t max_cycles = 60;

    std::string clock = "logical";  // logical | system
    std::string trace_path;
    std::uint64_t seed = 7;
    bool shuffle_tasks = false;
    std::vector<std::string> bench_policies{"single_shot", "optimal"};

    std::string event_prompt_path;
    std::string candidate_prompt_path;
    std::string dispatch_prompt_path;

    // Relative paths resolve against this directory.
    std::filesystem::path base_dir = ".";

    // Throws ConfigError naming the offending field.
    void validate() const;

    std::filesystem::path resolve(const std::string& path) const;
};

// Throws ConfigError.
RuntimeConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
RuntimeConfig load_config(const std::filesystem::path& path);

// Throws ConfigError (wrapping data errors).
shop::Catalog load_catalog(const RuntimeConfig& cfg);
std::vector<shop::TaskSpec> load_task_specs(const RuntimeConfig& cfg);

// Reads a prompt override, or returns empty for the built-in prompt.
std::string load_prompt(const RuntimeConfig& cfg, const std::string& path);

}  // namespace evagent::runtime
