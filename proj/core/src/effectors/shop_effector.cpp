#include "evagent/effectors/shop_effector.hpp"

namespace evagent::effectors {

ShopEffector::ShopEffector(shop::ShopEnv& env, Clock& clock)
    : Effector({Verb::search, Verb::click}, clock), env_(env) {}

std::string ShopEffector::perform(const Action& a) {
    try {
        const auto r = env_.step(a);
        return r.summary + "\n" + r.observation.text;
    } catch (const shop::ShopError& e) {
        throw EnvironmentError(e.what());
    }
}

std::string ShopEffector::perform_noop() {
    // A noop still spends a step so the step cap bounds idle episodes.
    return perform(Action::noop());
}

}  // namespace evagent::effectors
