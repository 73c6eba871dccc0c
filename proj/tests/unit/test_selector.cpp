#include <gtest/gtest.h>

#include "evagent/decision/selector.hpp"
#include "evagent/memory/local_store.hpp"
#include "evagent/model/errors.hpp"
#include "evagent/provider/scripted.hpp"

using namespace evagent;
using namespace evagent::decision;

namespace {

Event constrained(std::vector<std::string> patterns) {
    Event e;
    e.id = "ev-1";
    e.intent = "buy";
    for (const auto& p : patterns) e.available_actions.push_back(parse_pattern(p));
    return e;
}

struct Rig {
    explicit Rig(provider::Script s) : provider(std::move(s)), store({}, clock), ids("d") {}

    ActionSelector selector() { return ActionSelector(provider, store, clock, ids, {}, trace); }

    provider::ScriptedProvider provider;
    LogicalClock clock;
    memory::LocalMemoryStore store;
    IdSequence ids;
    MemoryTrace trace;
};

}  // namespace

TEST(FilterCandidates, AvailabilityFilter) {
    MemoryTrace trace;
    const auto cs = filter_candidates(R"(["click[\"Buy Now\"]", "click[\"Back\"]"])", constrained({"click[\"Buy Now\"]"}), trace);
    ASSERT_EQ(cs.candidates.size(), 1u);
    EXPECT_EQ(cs.candidates[0], Action::click("Buy Now"));
    EXPECT_EQ(trace.count("decision.candidate_rejected"), 1u);
}

TEST(FilterCandidates, KeepsFirstFive) {
    const auto cs = filter_candidates(
        R"(["search[\"a\"]","search[\"b\"]","search[\"c\"]","search[\"d\"]","search[\"e\"]","search[\"f\"]","search[\"g\"]"])",
        Event{});
    ASSERT_EQ(cs.candidates.size(), 5u);
    EXPECT_EQ(cs.candidates[0].arg(), "a");
    EXPECT_EQ(cs.candidates[4].arg(), "e");
}

TEST(FilterCandidates, EmptyAndMalformed) {
    EXPECT_TRUE(filter_candidates("[]", Event{}).candidates.empty());
    EXPECT_TRUE(filter_candidates("no json", Event{}).candidates.empty());
    const auto cs = filter_candidates(R"([{"action": "noop", "rationale": "wait"}, {"x": 1}, "clik[\"a\"]"])", Event{});
    ASSERT_EQ(cs.candidates.size(), 1u);
    EXPECT_EQ(cs.rationales[0], "wait");
}

TEST(DispatchReply, Strict) {
    EXPECT_EQ(parse_dispatch_reply("2", 3), 1u);
    EXPECT_EQ(parse_dispatch_reply("noop", 3), std::nullopt);
    EXPECT_THROW(parse_dispatch_reply("0", 3), ParseError);
    EXPECT_THROW(parse_dispatch_reply("4", 3), ParseError);
    EXPECT_THROW(parse_dispatch_reply("two", 3), ParseError);
    EXPECT_THROW(parse_dispatch_reply("click[\"a\"]", 3), ParseError);
}

TEST(Dispatch, EmptySetForcesNoopWithoutCall) {
    Rig rig(provider::Script{});
    auto sel = rig.selector();
    const auto d = sel.dispatch(CandidateSet{"ev-1", {}, {}}, Event{}, {}, {});
    EXPECT_TRUE(d.chosen.is_noop());
    EXPECT_EQ(rig.provider.calls(), 0u);
}

TEST(Dispatch, IndexSelection) {
    Rig rig(provider::Script{{{"### dispatch", "2", false}}, std::nullopt});
    auto sel = rig.selector();
    const CandidateSet cs{"ev-1", {Action::click("a1"), Action::click("a2")}, {"", ""}};
    const auto d = sel.dispatch(cs, Event{}, {}, {});
    EXPECT_EQ(d.chosen, Action::click("a2"));
    EXPECT_EQ(d.candidate_count, 2u);
}

TEST(Dispatch, OutOfSetCoercedToNoop) {
    Rig rig(provider::Script{{{"### dispatch", "click[\"elsewhere\"]", false}}, std::nullopt});
    auto sel = rig.selector();
    const auto d = sel.dispatch(CandidateSet{"ev-1", {Action::click("a1")}, {""}}, Event{}, {}, {});
    EXPECT_TRUE(d.chosen.is_noop());
    EXPECT_EQ(rig.trace.count("decision.dispatch_rejected"), 1u);
}

TEST(Dispatch, ProviderErrorBecomesNoop) {
    Rig rig(provider::Script{});
    auto sel = rig.selector();
    const auto d = sel.dispatch(CandidateSet{"ev-1", {Action::click("a1")}, {""}}, Event{}, {}, {});
    EXPECT_TRUE(d.chosen.is_noop());
    EXPECT_EQ(rig.trace.count("decision.dispatch_error"), 1u);
}

TEST(SelectAction, IdleOnEmptyQueue) {
    Rig rig(provider::Script{});
    auto sel = rig.selector();
    events::EventQueue q;
    EXPECT_FALSE(sel.select_action(q, 0));
}

TEST(SelectAction, SingletonAvailability) {
    Rig rig(provider::Script{{{"### candidate-generation", R"(["click[\"Buy Now\"]"])", false}, {"### dispatch", "1", false}},
                             std::nullopt});
    auto sel = rig.selector();
    events::EventQueue q;
    auto e = constrained({"click[\"Buy Now\"]"});
    e.ts.wall_nanos = 1;
    q.push(e);
    const auto cycle = sel.select_action(q, 1);
    ASSERT_TRUE(cycle);
    EXPECT_EQ(cycle->decision.chosen, Action::click("Buy Now"));
}

TEST(SelectAction, NewestDrivesDecision) {
    Rig rig(provider::Script{{{"### candidate-generation", "[]", false}}, std::nullopt});
    auto sel = rig.selector();
    events::EventQueue q;
    for (int i = 0; i < 3; ++i) {
        Event e;
        e.id = "e" + std::to_string(i);
        e.intent = "x";
        e.ts.wall_nanos = (i == 1) ? 50 : 10 * i;
        q.push(e);
    }
    const auto cycle = sel.select_action(q, 50);
    ASSERT_TRUE(cycle);
    EXPECT_EQ(cycle->event.id, "e1");
    EXPECT_EQ(q.size(), 2u);
    EXPECT_EQ(cycle->decision.event_id, "e1");
}

TEST(SelectAction, RecordsMemoryVersion) {
    Rig rig(provider::Script{{{"### candidate-generation", "[]", false}}, std::nullopt});
    Event e;
    e.id = "x";
    e.intent = "y";
    rig.store.record_event(e);
    rig.store.record_event(e);
    auto sel = rig.selector();
    events::EventQueue q;
    q.push(e);
    EXPECT_EQ(sel.select_action(q, 0)->decision.memory_version, 2u);
}

TEST(SelectAction, GenerationFailureReadmitsOnce) {
    Rig rig(provider::Script{});
    auto sel = rig.selector();
    events::EventQueue q;
    Event e;
    e.id = "only";
    e.intent = "x";
    q.push(e);
    auto first = sel.select_action(q, 0);
    ASSERT_TRUE(first);
    EXPECT_TRUE(first->generation_failed);
    EXPECT_TRUE(first->decision.chosen.is_noop());
    EXPECT_EQ(q.size(), 1u);
    auto second = sel.select_action(q, 0);
    ASSERT_TRUE(second);
    EXPECT_TRUE(second->decision.chosen.is_noop());
    EXPECT_EQ(q.size(), 0u);
    EXPECT_FALSE(sel.select_action(q, 0));
}

TEST(SelectAction, PeersAndTasksReachPrompt) {
    Rig rig(provider::Script{});
    auto sel = rig.selector();
    Event e, peer;
    e.id = "main";
    e.intent = "main intent";
    peer.id = "peer";
    peer.intent = "peer intent";
    const std::vector<Event> peers{peer};
    const auto msg = sel.candidate_message(e, {}, peers, {"buy socks | short_term | 0 decisions"});
    EXPECT_NE(msg.find("peer intent"), std::string::npos);
    EXPECT_NE(msg.find("buy socks | short_term | 0 decisions"), std::string::npos);
    EXPECT_EQ(msg.rfind("### candidate-generation", 0), 0u);
}
