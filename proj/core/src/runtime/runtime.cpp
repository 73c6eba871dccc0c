#include "evagent/runtime/runtime.hpp"

#include <optional>
#include <random>

#include "evagent/decision/selector.hpp"
#include "evagent/effectors/shop_effector.hpp"
#include "evagent/events/event_generator.hpp"
#include "evagent/events/timer_source.hpp"
#include "evagent/memory/local_store.hpp"
#include "evagent/memory/remote_store.hpp"
#include "evagent/model/json.hpp"
#include "evagent/provider/scripted.hpp"
#include "evagent/runtime/inbox.hpp"
#include "evagent/runtime/policies.hpp"
#include "evagent/shop/shop_env.hpp"

#ifdef EVAGENT_WITH_HTTP
#include "evagent/provider/openai_client.hpp"
#endif

namespace evagent::runtime {

using nlohmann::json;

void to_json(json& j, const EpisodeReport& r) {
    j = json{{"task_id", r.task_id},
             {"cycles", r.cycles},
             {"decisions", r.decisions},
             {"reward", r.reward},
             {"memory_version_delta", r.memory_version_delta},
             {"events_generated", r.events_generated},
             {"actions_executed", r.actions_executed},
             {"wall_time_nanos", r.wall_time_nanos},
             {"done", r.done}};
}

void to_json(json& j, const BatchReport& r) {
    json tasks = json::array();
    for (const auto& t : r.tasks) tasks.push_back({{"task_id", t.task_id}, {"reward", t.reward}});
    j = json{{"policy", r.policy}, {"label", r.label}, {"tasks", tasks}, {"mean", r.mean}};
}

ProviderFactory make_provider_factory(const RuntimeConfig& cfg, const shop::Catalog& catalog, std::string policy) {
    if (cfg.provider.kind == "remote") {
#ifdef EVAGENT_WITH_HTTP
        auto shared = std::make_shared<provider::OpenAiCompatibleProvider>(cfg.provider.remote);
        return [shared](const shop::TaskSpec&) { return shared; };
#else
        throw ConfigError("this build has no remote provider support");
#endif
    }
    if (policy.empty()) policy = cfg.provider.script;
    return [cfg, catalog, policy](const shop::TaskSpec& spec) -> std::shared_ptr<provider::ReasoningProvider> {
        return std::make_shared<provider::ScriptedProvider>(build_script(policy, spec, catalog, cfg));
    };
}

Runtime::Runtime(RuntimeConfig cfg) : Runtime(cfg, load_catalog(cfg), {}) {}

Runtime::Runtime(RuntimeConfig cfg, shop::Catalog catalog, ProviderFactory providers)
    : cfg_(std::move(cfg)), catalog_(std::move(catalog)), providers_(std::move(providers)) {
    cfg_.validate();
    if (catalog_.empty()) throw ConfigError("catalog is empty");
    if (!providers_) providers_ = make_provider_factory(cfg_, catalog_);

    if (cfg_.clock == "system") {
        clock_ = std::make_unique<SystemClock>();
    } else {
        clock_ = std::make_unique<LogicalClock>();
    }

    if (cfg_.trace_path.empty()) {
        trace_ = std::make_unique<MemoryTrace>();
    } else {
        trace_ = std::make_unique<FileTrace>(cfg_.resolve(cfg_.trace_path).string());
    }

    if (cfg_.memory.kind == "remote") {
#ifdef EVAGENT_WITH_HTTP
        memory_ = std::make_unique<memory::RemoteMemoryStore>(cfg_.memory.remote, *trace_);
#else
        throw ConfigError("this build has no remote memory support");
#endif
    } else {
        memory::LocalStoreConfig mc;
        mc.dimension = cfg_.dimension;
        mc.short_term_window = cfg_.short_term_window;
        mc.threshold = cfg_.threshold;
        auto local = std::make_unique<memory::LocalMemoryStore>(mc, *clock_);
        if (!cfg_.memory.snapshot.empty() && std::filesystem::exists(cfg_.resolve(cfg_.memory.snapshot)))
            local->load_snapshot(cfg_.resolve(cfg_.memory.snapshot).string());
        memory_ = std::move(local);
    }

    tasks_ = std::make_unique<tasks::TaskManager>(*clock_, cfg_.noop_cutoff);
    queue_ = std::make_unique<events::EventQueue>(cfg_.queue, *trace_);
}

Runtime::~Runtime() {
    try {
        shutdown();
    } catch (...) {
    }
}

void Runtime::shutdown() {
    if (shut_down_) return;
    shut_down_ = true;
    if (cfg_.memory.kind == "local" && !cfg_.memory.snapshot.empty()) {
        static_cast<memory::LocalMemoryStore&>(*memory_).save_snapshot(cfg_.resolve(cfg_.memory.snapshot).string());
    }
}

EpisodeReport Runtime::run_episode(const shop::TaskSpec& spec, std::ostream* transcript) {
    shop::check_task(spec);
    ++episodes_;
    auto provider = providers_(spec);
    Clock& clock = *clock_;
    const std::int64_t started = clock.now_nanos();
    const std::uint64_t version_before = memory_->version();

    memory_->begin_session(spec.id + "#" + std::to_string(episodes_));

    events::GeneratorConfig gen_cfg;
    gen_cfg.k_max = cfg_.k_max;
    gen_cfg.fallback = cfg_.event_fallback;
    gen_cfg.system_prompt = load_prompt(cfg_, cfg_.event_prompt_path);
    events::EventGenerator generator(*provider, clock, event_ids_, gen_cfg, *trace_);

    decision::SelectorConfig sel_cfg;
    sel_cfg.limits = cfg_.retrieval;
    sel_cfg.candidate_prompt = load_prompt(cfg_, cfg_.candidate_prompt_path);
    sel_cfg.dispatch_prompt = load_prompt(cfg_, cfg_.dispatch_prompt_path);
    decision::ActionSelector selector(*provider, *memory_, clock, decision_ids_, sel_cfg, *trace_);

    shop::ShopEnv env(catalog_, cfg_.shop);
    effectors::EffectorRegistry effectors(clock);
    auto shop_effector = std::make_shared<effectors::ShopEffector>(env, clock);
    effectors.bind(Verb::search, shop_effector);
    effectors.bind(Verb::click, shop_effector);
    effectors.bind(Verb::noop, shop_effector);

    EpisodeReport report;
    report.task_id = spec.id;
    std::optional<std::string> task_id;

    auto write = [&](const json& record) {
        if (transcript) *transcript << record.dump() << '\n';
    };
    write({{"type", "episode_start"}, {"episode", episodes_}, {"task", spec}});

    // Generates events for one raw input, admits them, refreshes memory.
    auto ingest = [&](const events::RawInput& raw) {
        std::vector<std::string> ids;
        std::vector<Event> generated;
        try {
            generated = generator.generate(raw);
        } catch (const provider::ProviderError& e) {
            trace_->emit("runtime.generation_failed", {{"error", e.what()}});
            return ids;
        }
        for (auto& e : generated) {
            if (!task_id) task_id = tasks_->spawn_task(spec.instruction, tasks::TaskKind::short_term, e).id;
            memory_->record_event(e);
            ++report.events_generated;
            ids.push_back(e.id);
            queue_->push(std::move(e));
        }
        return ids;
    };

    Inbox inbox;
    std::unique_ptr<events::TimerSource> timer;
    if (cfg_.timer_interval.count() > 0) {
        timer = std::make_unique<events::TimerSource>(cfg_.timer_interval, [&inbox](events::RawInput in) { inbox.post(std::move(in)); });
        timer->start();
    }

    const auto first = env.reset(spec);
    inbox.post(events::RawInput{Source::sensor, first.text, Timestamp{clock.now_nanos(), 0}});

    std::size_t idle_polls = 0;
    while (!env.done() && report.cycles < cfg_.max_cycles && idle_polls < cfg_.max_cycles) {
        for (const auto& raw : inbox.drain()) {
            const auto ids = ingest(raw);
            write({{"type", "ingest"}, {"source", source_name(raw.source)}, {"events", ids}});
        }

        auto cycle = selector.select_action(*queue_, clock.now_nanos(), tasks_->active_context());
        if (!cycle) {
            ++idle_polls;
            if (!(timer && inbox.wait_for(cfg_.timer_interval * 2))) {
                // Nothing is pending: poll the environment sensor.
                inbox.post(events::RawInput{Source::sensor, env.observe().text, Timestamp{clock.now_nanos(), 0}});
                write({{"type", "sensor_poll"}, {"poll", idle_polls}});
            }
            continue;
        }
        ++report.cycles;

        const Action& chosen = cycle->decision.chosen;
        Feedback feedback;
        try {
            feedback = effectors.execute(chosen);
        } catch (const effectors::CapabilityMismatch& e) {
            feedback = Feedback{chosen, std::string("error: ") + e.what(), false, Timestamp{clock.now_nanos(), 0}};
        }
        ++report.actions_executed;
        memory_->record_outcome(chosen, feedback);
        report.decisions.push_back(cycle->decision);

        if (task_id && tasks_->get(*task_id).state == tasks::TaskState::active) tasks_->note_decision(*task_id, cycle->decision);

        // The feedback re-enters the event generator within this cycle.
        const auto ingested = ingest(effectors::feedback_to_input(feedback));

        write({{"type", "cycle"},
               {"cycle", report.cycles},
               {"event", cycle->event},
               {"memory", cycle->memory},
               {"candidates", cycle->candidates},
               {"generation_failed", cycle->generation_failed},
               {"decision", cycle->decision},
               {"feedback", feedback},
               {"ingested", ingested}});
    }

    if (timer) timer->stop();
    for (const auto& leftover : queue_->clear()) trace_->emit("runtime.drained", {{"event_id", leftover.id}});

    report.done = env.done();
    report.reward = env.final_reward().value_or(0.0);
    if (task_id && tasks_->get(*task_id).state == tasks::TaskState::active) {
        if (env.state().purchased) {
            tasks_->complete(*task_id);
        } else {
            tasks_->fail(*task_id);
        }
    }
    tasks_->end_episode();

    report.memory_version_delta = memory_->version() - version_before;
    report.wall_time_nanos = clock.now_nanos() - started;
    write({{"type", "episode_end"}, {"report", report}});

    if (report.memory_version_delta != report.events_generated + report.actions_executed) {
        throw AuditError("memory refresh audit failed for " + spec.id + ": version delta " +
                         std::to_string(report.memory_version_delta) + " != events " +
                         std::to_string(report.events_generated) + " + actions " +
                         std::to_string(report.actions_executed));
    }
    return report;
}

BatchReport Runtime::run_batch(const std::vector<shop::TaskSpec>& specs,
                               const std::function<std::ostream*(const shop::TaskSpec&)>& transcript_for) {
    if (specs.empty()) throw ConfigError("task list is empty");
    BatchReport batch;
    double total = 0.0;
    for (const auto& spec : specs) {
        const auto r = run_episode(spec, transcript_for ? transcript_for(spec) : nullptr);
        batch.tasks.push_back({spec.id, r.reward});
        total += r.reward;
    }
    batch.mean = total / static_cast<double>(specs.size());
    return batch;
}

std::vector<shop::TaskSpec> order_tasks(std::vector<shop::TaskSpec> specs, const RuntimeConfig& cfg) {
    if (!cfg.shuffle_tasks) return specs;
    // mt19937_64 output is fully specified; distributions are not, so the
    // index reduction is done by hand.
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = specs.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(specs[i - 1], specs[j]);
    }
    return specs;
}

}  // namespace evagent::runtime
