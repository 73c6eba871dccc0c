#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "evagent/decision/types.hpp"
#include "evagent/model/errors.hpp"
#include "evagent/model/event.hpp"

namespace evagent::tasks {

enum class TaskKind { short_term, long_term };
enum class TaskState { active, completed, failed, expired };

std::string_view kind_name(TaskKind k) noexcept;
std::string_view state_name(TaskState s) noexcept;

struct Task {
    std::string id;
    std::string goal;
    TaskKind kind = TaskKind::short_term;
    TaskState state = TaskState::active;
    Timestamp created_at;
    std::vector<std::string> history;  // decision ids, append-only
    std::string origin_event;
    std::size_t consecutive_noops = 0;
};

void to_json(nlohmann::json& j, const Task& t);

class TaskError : public Error {
public:
    enum class Kind { duplicate_origin, not_active, unknown_task, empty_goal };

    TaskError(Kind kind, std::string detail) : Error(std::move(detail)), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// The only legal transitions are active -> {completed, failed, expired}.
bool transition_allowed(TaskState from, TaskState to) noexcept;

// Goals and reasoning state. Mutated by the decision loop only; reads are
// safe from other threads.
class TaskManager {
public:
    explicit TaskManager(Clock& clock, std::size_t noop_cutoff = 3);

    Task spawn_task(std::string goal, TaskKind kind, const Event& origin);

    // Appends the decision and tracks consecutive noops; the task fails once
    // `noop_cutoff` noops arrive in a row. Throws NotActive / UnknownTask.
    Task note_decision(const std::string& task_id, const decision::Decision& d);

    Task complete(const std::string& task_id);
    Task fail(const std::string& task_id);

    // Expires every still-active short-term task; returns how many.
    std::size_t end_episode();

    // "goal | kind | N decisions" for every active task, newest first.
    std::vector<std::string> active_context() const;

    Task get(const std::string& task_id) const;
    std::vector<Task> all() const;

private:
    Task set_state(const std::string& task_id, TaskState to);
    Task& find_locked(const std::string& task_id);

    Clock& clock_;
    std::size_t noop_cutoff_;
    IdSequence ids_{"task"};
    mutable std::mutex mu_;
    std::vector<Task> tasks_;  // creation order
};

}  // namespace evagent::tasks
