#include <gtest/gtest.h>

#include "evagent/effectors/shop_effector.hpp"
#include "evagent/shop/shop_env.hpp"

using namespace evagent;
using namespace evagent::effectors;

namespace {

class Recorder final : public Effector {
public:
    Recorder(std::set<Verb> caps, Clock& clock, bool fail = false) : Effector(std::move(caps), clock), fail_(fail) {}
    int performed = 0;

protected:
    std::string perform(const Action& a) override {
        ++performed;
        if (fail_) throw EnvironmentError("socket closed");
        return "did " + render_action(a);
    }

private:
    bool fail_;
};

shop::Catalog tiny_catalog() {
    shop::Product p;
    p.id = "P1";
    p.title = "Red Shoes";
    p.attributes = {"red"};
    p.options = {{"size", {"9", "10"}}};
    p.price = 20;
    return shop::Catalog({p});
}

shop::TaskSpec tiny_task() {
    shop::TaskSpec t;
    t.id = "t";
    t.instruction = "red shoes size 10";
    t.target_attributes = {"red"};
    t.target_options = {{"size", "10"}};
    t.price_cap = 25;
    return t;
}

}  // namespace

TEST(Effector, NoopIsUniversal) {
    LogicalClock clock;
    Recorder r({Verb::search}, clock);
    const auto f = r.execute(Action::noop());
    EXPECT_TRUE(f.success);
    EXPECT_EQ(f.outcome, "noop");
    EXPECT_EQ(r.performed, 0);
}

TEST(Effector, CapabilityMismatch) {
    LogicalClock clock;
    Recorder r({Verb::search}, clock);
    EXPECT_THROW(r.execute(Action::click("Buy Now")), CapabilityMismatch);
    EXPECT_EQ(r.performed, 0);
}

TEST(Effector, EnvironmentErrorBecomesFailedFeedback) {
    LogicalClock clock;
    Recorder r({Verb::click}, clock, true);
    const auto f = r.execute(Action::click("x"));
    EXPECT_FALSE(f.success);
    EXPECT_EQ(f.outcome, "error: socket closed");
}

TEST(Effector, OneFeedbackPerExecute) {
    LogicalClock clock;
    Recorder r({Verb::click}, clock);
    const auto f = r.execute(Action::click("x"));
    EXPECT_EQ(r.performed, 1);
    EXPECT_EQ(f.action, Action::click("x"));
    EXPECT_GT(f.emitted_at.wall_nanos, 0);
}

TEST(ShopEffector, BuyNowOnProductPage) {
    LogicalClock clock;
    shop::ShopEnv env(tiny_catalog());
    env.reset(tiny_task());
    ShopEffector eff(env, clock);
    EXPECT_TRUE(eff.execute(Action::search("red shoes")).success);
    EXPECT_TRUE(eff.execute(Action::click("P1")).success);
    EXPECT_TRUE(eff.execute(Action::click("10")).success);
    const auto f = eff.execute(Action::click("Buy Now"));
    EXPECT_TRUE(f.success);
    EXPECT_EQ(f.outcome.rfind("purchased P1\n", 0), 0u);
    EXPECT_NE(f.outcome.find("reward: 1.000"), std::string::npos);
    EXPECT_EQ(env.final_reward(), 1.0);
}

TEST(ShopEffector, IllegalActionIsFailedFeedback) {
    LogicalClock clock;
    shop::ShopEnv env(tiny_catalog());
    env.reset(tiny_task());
    ShopEffector eff(env, clock);
    const auto f = eff.execute(Action::click("Buy Now"));
    EXPECT_FALSE(f.success);
    EXPECT_NE(f.outcome.find("not available"), std::string::npos);
}

TEST(Registry, BindLookupExecute) {
    LogicalClock clock;
    EffectorRegistry reg(clock);
    auto r = std::make_shared<Recorder>(std::set<Verb>{Verb::search}, clock);
    EXPECT_THROW(reg.bind(Verb::click, r), CapabilityMismatch);
    reg.bind(Verb::search, r);
    EXPECT_EQ(reg.lookup(Verb::search), r.get());
    EXPECT_EQ(reg.execute(Action::search("q")).outcome, "did search[\"q\"]");
    EXPECT_TRUE(reg.execute(Action::noop()).success);
    EXPECT_THROW(reg.execute(Action::click("x")), CapabilityMismatch);
}

TEST(FeedbackToInput, Formats) {
    const Feedback ok{Action::click("B001"), "opened B001", true, Timestamp{5, 0}};
    const auto in = feedback_to_input(ok);
    EXPECT_EQ(in.source, Source::feedback);
    EXPECT_EQ(in.payload, "click[\"B001\"] -> opened B001");

    const Feedback bad{Action::click("x"), "error: not available", false, {}};
    EXPECT_NE(feedback_to_input(bad).payload.find("error: not available"), std::string::npos);

    const Feedback idle{Action::noop(), "noop", true, {}};
    EXPECT_EQ(feedback_to_input(idle).payload, "noop -> noop");
}
