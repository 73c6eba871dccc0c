#include "evagent/runtime/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "evagent/model/errors.hpp"

namespace evagent::runtime {

using nlohmann::json;

std::string format_reward(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", r);
    std::string s(buf);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

std::string render_bench_table(const std::vector<BatchReport>& rows) {
    std::ostringstream out;
    std::size_t label_w = std::string("Agent Configuration").size();
    for (const auto& r : rows) label_w = std::max(label_w, r.label.size());

    out << std::left << std::setw(static_cast<int>(label_w)) << "Agent Configuration" << " | Average Reward\n";
    out << std::string(label_w, '-') << "-+---------------\n";
    for (const auto& r : rows) {
        char mean[32];
        std::snprintf(mean, sizeof mean, "%.2f", r.mean);
        out << std::left << std::setw(static_cast<int>(label_w)) << r.label << " | " << mean << '\n';
    }
    if (rows.empty()) return out.str();

    out << '\n' << std::left << std::setw(8) << "task";
    for (const auto& r : rows) out << " | " << std::setw(12) << r.policy;
    out << '\n' << std::string(8, '-');
    for (std::size_t i = 0; i < rows.size(); ++i) out << "-+-" << std::string(12, '-');
    out << '\n';
    for (std::size_t t = 0; t < rows.front().tasks.size(); ++t) {
        out << std::left << std::setw(8) << rows.front().tasks[t].task_id;
        for (const auto& r : rows) {
            char cell[32];
            std::snprintf(cell, sizeof cell, "%.3f", t < r.tasks.size() ? r.tasks[t].reward : 0.0);
            out << " | " << std::setw(12) << cell;
        }
        out << '\n';
    }
    return out.str();
}

json bench_report_json(const std::vector<BatchReport>& rows) {
    return json{{"rows", rows}};
}

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

std::string render_replay(std::istream& transcript) {
    std::ostringstream out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(transcript, line)) {
        ++line_no;
        if (line.empty()) continue;
        const json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("type"))
            throw ConfigError("transcript line " + std::to_string(line_no) + " is not a transcript record");
        try {
            const auto type = rec.at("type").get<std::string>();
            if (type == "episode_start") {
                const auto& task = rec.at("task");
                out << "episode " << rec.at("episode").get<std::size_t>() << " task " << task.at("id").get<std::string>()
                    << ": " << task.at("instruction").get<std::string>() << '\n';
            } else if (type == "cycle") {
                const auto& ev = rec.at("event");
                out << "cycle " << rec.at("cycle").get<std::size_t>() << '\n';
                out << "  event     " << ev.at("id").get<std::string>() << " [" << ev.at("source").get<std::string>() << "] "
                    << first_line(ev.at("intent").get<std::string>()) << '\n';
                out << "  candidates";
                const auto& cands = rec.at("candidates").at("candidates");
                if (cands.empty()) out << " (none)";
                for (std::size_t i = 0; i < cands.size(); ++i) out << ' ' << (i + 1) << ") " << cands[i].get<std::string>();
                out << '\n';
                const auto& d = rec.at("decision");
                out << "  decision  " << d.at("chosen").get<std::string>() << " (memory v"
                    << d.at("memory_version").get<std::uint64_t>() << ")\n";
                const auto& f = rec.at("feedback");
                out << "  feedback  " << (f.at("success").get<bool>() ? "ok" : "failed") << ": "
                    << first_line(f.at("outcome").get<std::string>()) << '\n';
            } else if (type == "ingest") {
                out << "ingest [" << rec.at("source").get<std::string>() << "]";
                for (const auto& id : rec.at("events")) out << ' ' << id.get<std::string>();
                out << '\n';
            } else if (type == "sensor_poll") {
                out << "idle: sensor poll " << rec.at("poll").get<std::size_t>() << '\n';
            } else if (type == "episode_end") {
                const auto& r = rec.at("report");
                out << "cycles: " << r.at("cycles").get<std::size_t>() << ", events: " << r.at("events_generated").get<std::size_t>()
                    << ", actions: " << r.at("actions_executed").get<std::size_t>() << '\n';
                out << "reward: " << format_reward(r.at("reward").get<double>()) << '\n';
            } else {
                throw ConfigError("transcript line " + std::to_string(line_no) + " has unknown type '" + type + "'");
            }
        } catch (const json::exception& e) {
            throw ConfigError("transcript line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (line_no == 0) throw ConfigError("transcript is empty");
    return out.str();
}

}  // namespace evagent::runtime
