#include "evagent_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "evagent/model/errors.hpp"
#include "evagent/runtime/host.hpp"
#include "evagent/runtime/policies.hpp"
#include "evagent/runtime/report.hpp"
#include "evagent/runtime/runtime.hpp"
#include "evagent/shop/catalog.hpp"

namespace evagent::cli {

namespace fs = std::filesystem;
using runtime::RuntimeConfig;

namespace {

struct Options {
    std::string config;
    std::string task;
    std::string provider;
    std::string memory;
    std::string policy;
    std::string transcript;
    std::string report = "bench_report.json";
    std::string transcripts_dir;
    std::vector<std::string> policies;
    std::string replay_file;
};

RuntimeConfig configure(const Options& o) {
    if (o.config.empty()) throw ConfigError("--config is required");
    if (!fs::exists(o.config)) throw ConfigError("config file '" + o.config + "' does not exist");
    // Parse once to apply overrides, then validate the result.
    RuntimeConfig cfg = runtime::load_config(o.config);
    if (!o.provider.empty()) cfg.provider.kind = o.provider;
    if (!o.memory.empty()) cfg.memory.kind = o.memory;
    if (!o.policy.empty()) cfg.provider.script = o.policy;
    if (!o.policies.empty()) cfg.bench_policies = o.policies;
    cfg.validate();
    return cfg;
}

std::ofstream open_out(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

int do_run(const Options& o, std::ostream& out) {
    const RuntimeConfig cfg = configure(o);
    const auto specs = runtime::load_task_specs(cfg);
    if (specs.empty()) throw ConfigError("task list is empty");
    const shop::TaskSpec* spec = &specs.front();
    if (!o.task.empty()) {
        spec = nullptr;
        for (const auto& s : specs) {
            if (s.id == o.task) spec = &s;
        }
        if (!spec) throw ConfigError("unknown task '" + o.task + "'");
    }

    runtime::Runtime rt(cfg);
    std::unique_ptr<std::ofstream> transcript;
    if (!o.transcript.empty()) transcript = std::make_unique<std::ofstream>(open_out(o.transcript));
    const auto report = rt.run_episode(*spec, transcript.get());
    rt.shutdown();

    out << "task " << report.task_id << ": " << report.cycles << " cycles, " << report.events_generated << " events, "
        << report.actions_executed << " actions\n";
    out << "reward: " << runtime::format_reward(report.reward) << '\n';
    return 0;
}

int do_bench(const Options& o, std::ostream& out) {
    const RuntimeConfig cfg = configure(o);
    const auto specs = runtime::order_tasks(runtime::load_task_specs(cfg), cfg);
    if (specs.empty()) throw ConfigError("task list is empty");
    const auto catalog = runtime::load_catalog(cfg);

    std::vector<runtime::BatchReport> rows;
    for (const auto& policy : cfg.bench_policies) {
        // Fresh runtime per configuration so memory does not leak between rows.
        runtime::Runtime rt(cfg, catalog, runtime::make_provider_factory(cfg, catalog, policy));
        std::vector<std::unique_ptr<std::ofstream>> files;
        auto transcript_for = [&](const shop::TaskSpec& spec) -> std::ostream* {
            if (o.transcripts_dir.empty()) return nullptr;
            files.push_back(std::make_unique<std::ofstream>(
                open_out(fs::path(o.transcripts_dir) / policy / (spec.id + ".jsonl"))));
            return files.back().get();
        };
        auto row = rt.run_batch(specs, transcript_for);
        row.policy = policy;
        row.label = runtime::policy_label(policy);
        rt.shutdown();
        rows.push_back(std::move(row));
    }

    out << runtime::render_bench_table(rows);
    if (!o.report.empty()) {
        auto f = open_out(o.report);
        f << runtime::bench_report_json(rows).dump(2) << '\n';
    }
    return 0;
}

int do_replay(const Options& o, std::ostream& out) {
    std::ifstream in(o.replay_file, std::ios::binary);
    if (!in) throw ConfigError("cannot read transcript '" + o.replay_file + "'");
    out << runtime::render_replay(in);
    return 0;
}

int do_validate(const Options& o, std::ostream& out) {
    const RuntimeConfig cfg = configure(o);
    const auto catalog = runtime::load_catalog(cfg);
    if (catalog.empty()) throw ConfigError("catalog is empty");
    const auto specs = runtime::load_task_specs(cfg);
    if (specs.empty()) throw ConfigError("task list is empty");
    std::set<std::string> ids;
    for (const auto& s : specs) {
        if (!ids.insert(s.id).second) throw ConfigError("duplicate task id '" + s.id + "'");
    }
    runtime::load_prompt(cfg, cfg.event_prompt_path);
    runtime::load_prompt(cfg, cfg.candidate_prompt_path);
    runtime::load_prompt(cfg, cfg.dispatch_prompt_path);
    out << "ok: " << catalog.size() << " products, " << specs.size() << " tasks\n";
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"event-driven agent runtime"};
    app.set_version_flag("--version", std::string(runtime::version_string()));
    app.require_subcommand(1);
    Options o;

    auto add_config = [&](CLI::App* sub) { sub->add_option("--config", o.config, "config file (JSON)")->required(); };
    auto add_backends = [&](CLI::App* sub) {
        sub->add_option("--provider", o.provider, "reasoning provider")->check(CLI::IsMember({"scripted", "remote"}));
        sub->add_option("--memory", o.memory, "memory store")->check(CLI::IsMember({"local", "remote"}));
    };

    auto* run = app.add_subcommand("run", "run a single episode");
    add_config(run);
    add_backends(run);
    run->add_option("--task", o.task, "task id (default: first task)");
    run->add_option("--policy", o.policy, "scripted policy name or script file");
    run->add_option("--transcript", o.transcript, "write the transcript here");

    auto* bench = app.add_subcommand("bench", "run every task under each bench policy");
    add_config(bench);
    add_backends(bench);
    bench->add_option("--report", o.report, "JSON report path");
    bench->add_option("--transcripts", o.transcripts_dir, "directory for per-task transcripts");
    bench->add_option("--policies", o.policies, "policies to compare")->delimiter(',');

    auto* replay = app.add_subcommand("replay", "render a transcript");
    replay->add_option("file", o.replay_file, "transcript file")->required();

    auto* validate = app.add_subcommand("validate", "lint config, catalog and task files");
    add_config(validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg_out, msg_err;
        const int code = app.exit(e, msg_out, msg_err);
        out << msg_out.str();
        err << msg_err.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) return do_run(o, out);
        if (*bench) return do_bench(o, out);
        if (*replay) return do_replay(o, out);
        if (*validate) return do_validate(o, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    } catch (const shop::ShopError& e) {
        err << "data error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "runtime failure: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

int cli_main(int argc, char** argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace evagent::cli
