#pragma once

#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/decision/types.hpp"
#include "evagent/events/event_queue.hpp"
#include "evagent/memory/memory_store.hpp"
#include "evagent/model/timestamp.hpp"
#include "evagent/model/trace.hpp"
#include "evagent/provider/provider.hpp"
#include "evagent/runtime/config.hpp"
#include "evagent/shop/catalog.hpp"
#include "evagent/tasks/task_manager.hpp"

namespace evagent::runtime {

struct EpisodeReport {
    std::string task_id;
    std::size_t cycles = 0;
    std::vector<decision::Decision> decisions;
    double reward = 0.0;
    std::uint64_t memory_version_delta = 0;
    std::size_t events_generated = 0;
    std::size_t actions_executed = 0;
    std::int64_t wall_time_nanos = 0;
    bool done = false;
};

void to_json(nlohmann::json& j, const EpisodeReport& r);

struct TaskResult {
    std::string task_id;
    double reward = 0.0;
};

struct BatchReport {
    std::string policy;
    std::string label;
    std::vector<TaskResult> tasks;
    double mean = 0.0;
};

void to_json(nlohmann::json& j, const BatchReport& r);

// Makes the reasoning provider used for one episode.
using ProviderFactory = std::function<std::shared_ptr<provider::ReasoningProvider>(const shop::TaskSpec&)>;

// Provider factory for the configured provider kind; for scripted providers
// `policy` overrides cfg.provider.script when non-empty.
ProviderFactory make_provider_factory(const RuntimeConfig& cfg, const shop::Catalog& catalog, std::string policy = {});

// Wires queue, generator, selector, memory, tasks and effectors into the
// closed loop: ingest -> generate events -> select -> execute -> feedback.
// Memory and tasks persist across the episodes run by one instance.
class Runtime {
public:
    // Throws ConfigError.
    Runtime(RuntimeConfig cfg, shop::Catalog catalog, ProviderFactory providers);
    explicit Runtime(RuntimeConfig cfg);
    ~Runtime();

    Runtime(const Runtime&) = delete;
    Runtime& operator=(const Runtime&) = delete;

    // Runs one task to completion or step cap. Writes line-delimited JSON
    // cycle records to `transcript` when given. Throws AuditError when the
    // memory version delta differs from events generated + actions executed.
    EpisodeReport run_episode(const shop::TaskSpec& spec, std::ostream* transcript = nullptr);

    // Runs every spec in order; throws ConfigError when `specs` is empty.
    // `transcript_for` may return nullptr to skip a task's transcript.
    BatchReport run_batch(const std::vector<shop::TaskSpec>& specs,
                          const std::function<std::ostream*(const shop::TaskSpec&)>& transcript_for = {});

    // Persists the memory snapshot, if configured.
    void shutdown();

    const RuntimeConfig& config() const noexcept { return cfg_; }
    const shop::Catalog& catalog() const noexcept { return catalog_; }
    memory::MemoryStore& memory() noexcept { return *memory_; }
    tasks::TaskManager& tasks() noexcept { return *tasks_; }
    TraceSink& trace() noexcept { return *trace_; }
    events::EventQueue& queue() noexcept { return *queue_; }

private:
    RuntimeConfig cfg_;
    shop::Catalog catalog_;
    ProviderFactory providers_;
    std::unique_ptr<Clock> clock_;
    std::unique_ptr<TraceSink> trace_;
    std::unique_ptr<memory::MemoryStore> memory_;
    std::unique_ptr<tasks::TaskManager> tasks_;
    std::unique_ptr<events::EventQueue> queue_;
    IdSequence event_ids_{"ev"};
    IdSequence decision_ids_{"d"};
    std::size_t episodes_ = 0;
    bool shut_down_ = false;
};

// Deterministic task order for bench: identity unless cfg.shuffle_tasks,
// then a Fisher-Yates shuffle driven by mt19937_64(cfg.seed).
std::vector<shop::TaskSpec> order_tasks(std::vector<shop::TaskSpec> specs, const RuntimeConfig& cfg);

}  // namespace evagent::runtime
