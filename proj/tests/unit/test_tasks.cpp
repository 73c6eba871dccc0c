#include <gtest/gtest.h>

#include "evagent/decision/types.hpp"
#include "evagent/tasks/task_manager.hpp"

using namespace evagent;
using namespace evagent::tasks;

namespace {

Event origin(std::string id) {
    Event e;
    e.id = std::move(id);
    e.intent = "x";
    return e;
}

decision::Decision decision_of(std::string id, Action a) {
    decision::Decision d;
    d.id = std::move(id);
    d.chosen = std::move(a);
    return d;
}

}  // namespace

TEST(TaskManager, SpawnFromEvent) {
    LogicalClock clock;
    TaskManager tm(clock);
    const auto t = tm.spawn_task("buy socks", TaskKind::short_term, origin("e1"));
    EXPECT_EQ(t.state, TaskState::active);
    EXPECT_EQ(t.origin_event, "e1");
}

TEST(TaskManager, DuplicateOrigin) {
    LogicalClock clock;
    TaskManager tm(clock);
    tm.spawn_task("a", TaskKind::short_term, origin("e1"));
    try {
        tm.spawn_task("b", TaskKind::short_term, origin("e1"));
        FAIL();
    } catch (const TaskError& e) {
        EXPECT_EQ(e.kind(), TaskError::Kind::duplicate_origin);
    }
}

TEST(TaskManager, EmptyGoal) {
    LogicalClock clock;
    TaskManager tm(clock);
    EXPECT_THROW(tm.spawn_task("", TaskKind::short_term, origin("e1")), TaskError);
}

TEST(TaskManager, LongTermSurvivesSweep) {
    LogicalClock clock;
    TaskManager tm(clock);
    const auto lt = tm.spawn_task("keep", TaskKind::long_term, origin("e1"));
    const auto st = tm.spawn_task("drop", TaskKind::short_term, origin("e2"));
    EXPECT_EQ(tm.end_episode(), 1u);
    EXPECT_EQ(tm.get(lt.id).state, TaskState::active);
    EXPECT_EQ(tm.get(st.id).state, TaskState::expired);
}

TEST(TaskManager, NoteDecision) {
    LogicalClock clock;
    TaskManager tm(clock, 3);
    const auto t = tm.spawn_task("g", TaskKind::short_term, origin("e1"));
    tm.note_decision(t.id, decision_of("d-1", Action::noop()));
    const auto after = tm.note_decision(t.id, decision_of("d-2", Action::click("x")));
    EXPECT_EQ(after.history, (std::vector<std::string>{"d-1", "d-2"}));
    EXPECT_EQ(after.consecutive_noops, 0u);
}

TEST(TaskManager, NoopCutoffFails) {
    LogicalClock clock;
    TaskManager tm(clock, 3);
    const auto t = tm.spawn_task("g", TaskKind::short_term, origin("e1"));
    for (int i = 0; i < 3; ++i) tm.note_decision(t.id, decision_of("d" + std::to_string(i), Action::noop()));
    EXPECT_EQ(tm.get(t.id).state, TaskState::failed);
}

TEST(TaskManager, NotActive) {
    LogicalClock clock;
    TaskManager tm(clock);
    const auto t = tm.spawn_task("g", TaskKind::short_term, origin("e1"));
    tm.complete(t.id);
    try {
        tm.note_decision(t.id, decision_of("d", Action::noop()));
        FAIL();
    } catch (const TaskError& e) {
        EXPECT_EQ(e.kind(), TaskError::Kind::not_active);
    }
    EXPECT_THROW(tm.get("task-99"), TaskError);
}

TEST(TaskManager, ActiveContext) {
    LogicalClock clock;
    TaskManager tm(clock);
    EXPECT_TRUE(tm.active_context().empty());
    const auto a = tm.spawn_task("first goal", TaskKind::short_term, origin("e1"));
    tm.spawn_task("second goal", TaskKind::long_term, origin("e2"));
    tm.note_decision(a.id, decision_of("d-1", Action::click("x")));
    EXPECT_EQ(tm.active_context(),
              (std::vector<std::string>{"second goal | long_term | 0 decisions", "first goal | short_term | 1 decisions"}));
    tm.complete(a.id);
    EXPECT_EQ(tm.active_context().size(), 1u);
}

TEST(TaskStates, ExhaustiveTransitions) {
    const TaskState all[] = {TaskState::active, TaskState::completed, TaskState::failed, TaskState::expired};
    for (auto from : all) {
        for (auto to : all) {
            const bool expected = from == TaskState::active && to != TaskState::active;
            EXPECT_EQ(transition_allowed(from, to), expected) << state_name(from) << " -> " << state_name(to);
        }
    }
    LogicalClock clock;
    TaskManager tm(clock);
    const auto t = tm.spawn_task("g", TaskKind::short_term, origin("e1"));
    tm.fail(t.id);
    EXPECT_THROW(tm.complete(t.id), TaskError);
    EXPECT_THROW(tm.fail(t.id), TaskError);
    EXPECT_EQ(tm.end_episode(), 0u);
    EXPECT_EQ(tm.get(t.id).state, TaskState::failed);
}
