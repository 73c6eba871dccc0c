#include "evagent/tasks/task_manager.hpp"

#include "evagent/model/json.hpp"

namespace evagent::tasks {

std::string_view kind_name(TaskKind k) noexcept { return k == TaskKind::long_term ? "long_term" : "short_term"; }

std::string_view state_name(TaskState s) noexcept {
    switch (s) {
        case TaskState::active: return "active";
        case TaskState::completed: return "completed";
        case TaskState::failed: return "failed";
        case TaskState::expired: return "expired";
    }
    return "active";
}

void to_json(nlohmann::json& j, const Task& t) {
    j = nlohmann::json{{"id", t.id},
                       {"goal", t.goal},
                       {"kind", std::string(kind_name(t.kind))},
                       {"state", std::string(state_name(t.state))},
                       {"created_at", t.created_at},
                       {"history", t.history},
                       {"origin_event", t.origin_event}};
}

bool transition_allowed(TaskState from, TaskState to) noexcept {
    return from == TaskState::active && to != TaskState::active;
}

TaskManager::TaskManager(Clock& clock, std::size_t noop_cutoff) : clock_(clock), noop_cutoff_(noop_cutoff) {
    if (noop_cutoff_ == 0) throw ConfigError("noop cutoff must be positive");
}

Task TaskManager::spawn_task(std::string goal, TaskKind kind, const Event& origin) {
    if (goal.empty()) throw TaskError(TaskError::Kind::empty_goal, "task goal must be non-empty");
    std::lock_guard lock(mu_);
    for (const auto& t : tasks_) {
        if (t.state == TaskState::active && t.origin_event == origin.id)
            throw TaskError(TaskError::Kind::duplicate_origin, "event " + origin.id + " already drives " + t.id);
    }
    Task t;
    t.id = ids_.next();
    t.goal = std::move(goal);
    t.kind = kind;
    t.created_at = Timestamp{clock_.now_nanos(), ids_.issued()};
    t.origin_event = origin.id;
    tasks_.push_back(t);
    return t;
}

Task& TaskManager::find_locked(const std::string& task_id) {
    for (auto& t : tasks_) {
        if (t.id == task_id) return t;
    }
    throw TaskError(TaskError::Kind::unknown_task, "no task " + task_id);
}

Task TaskManager::note_decision(const std::string& task_id, const decision::Decision& d) {
    std::lock_guard lock(mu_);
    Task& t = find_locked(task_id);
    if (t.state != TaskState::active) throw TaskError(TaskError::Kind::not_active, t.id + " is " + std::string(state_name(t.state)));
    t.history.push_back(d.id);
    t.consecutive_noops = d.chosen.is_noop() ? t.consecutive_noops + 1 : 0;
    if (t.consecutive_noops >= noop_cutoff_) t.state = TaskState::failed;
    return t;
}

Task TaskManager::set_state(const std::string& task_id, TaskState to) {
    std::lock_guard lock(mu_);
    Task& t = find_locked(task_id);
    if (!transition_allowed(t.state, to))
        throw TaskError(TaskError::Kind::not_active, t.id + " is " + std::string(state_name(t.state)));
    t.state = to;
    return t;
}

Task TaskManager::complete(const std::string& task_id) { return set_state(task_id, TaskState::completed); }

Task TaskManager::fail(const std::string& task_id) { return set_state(task_id, TaskState::failed); }

std::size_t TaskManager::end_episode() {
    std::lock_guard lock(mu_);
    std::size_t swept = 0;
    for (auto& t : tasks_) {
        if (t.state == TaskState::active && t.kind == TaskKind::short_term) {
            t.state = TaskState::expired;
            ++swept;
        }
    }
    return swept;
}

std::vector<std::string> TaskManager::active_context() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (auto it = tasks_.rbegin(); it != tasks_.rend(); ++it) {
        if (it->state != TaskState::active) continue;
        out.push_back(it->goal + " | " + std::string(kind_name(it->kind)) + " | " +
                      std::to_string(it->history.size()) + " decisions");
    }
    return out;
}

Task TaskManager::get(const std::string& task_id) const {
    std::lock_guard lock(mu_);
    for (const auto& t : tasks_) {
        if (t.id == task_id) return t;
    }
    throw TaskError(TaskError::Kind::unknown_task, "no task " + task_id);
}

std::vector<Task> TaskManager::all() const {
    std::lock_guard lock(mu_);
    return tasks_;
}

}  // namespace evagent::tasks
