#pragma once

#include "evagent/effectors/effector.hpp"
#include "evagent/shop/shop_env.hpp"

namespace evagent::effectors {

// Reference binding: drives a ShopEnv. Outcomes are the step summary line
// followed by the new page text.
class ShopEffector final : public Effector {
public:
    ShopEffector(shop::ShopEnv& env, Clock& clock);

    shop::ShopEnv& env() noexcept { return env_; }

protected:
    std::string perform(const Action& a) override;
    std::string perform_noop() override;

private:
    shop::ShopEnv& env_;
};

}  // namespace evagent::effectors
