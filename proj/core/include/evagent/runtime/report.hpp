#pragma once

#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/runtime/runtime.hpp"

namespace evagent::runtime {

// Shortest "%g" form with at least one decimal: 1 -> "1.0", 0.5 -> "0.5".
std::string format_reward(double r);

// Aligned plain-text tables: average reward per configuration, then the
// per-task rewards.
std::string render_bench_table(const std::vector<BatchReport>& rows);

nlohmann::json bench_report_json(const std::vector<BatchReport>& rows);

// Human-readable listing of a transcript. Throws ConfigError for lines that
// are not transcript records.
std::string render_replay(std::istream& transcript);

}  // namespace evagent::runtime
