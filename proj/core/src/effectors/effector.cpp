#include "evagent/effectors/effector.hpp"

namespace evagent::effectors {

Feedback Effector::execute(const Action& a) {
    if (!can_execute(a.verb())) throw CapabilityMismatch(a.verb());
    Feedback f;
    f.action = a;
    try {
        f.outcome = a.is_noop() ? perform_noop() : perform(a);
        f.success = true;
    } catch (const EnvironmentError& e) {
        f.outcome = std::string("error: ") + e.what();
        f.success = false;
    }
    f.emitted_at = Timestamp{clock_.now_nanos(), 0};
    return f;
}

void EffectorRegistry::bind(Verb v, std::shared_ptr<Effector> effector) {
    if (!effector || !effector->can_execute(v)) throw CapabilityMismatch(v);
    bindings_[v] = std::move(effector);
}

Effector* EffectorRegistry::lookup(Verb v) const {
    auto it = bindings_.find(v);
    return it == bindings_.end() ? nullptr : it->second.get();
}

Feedback EffectorRegistry::execute(const Action& a) {
    if (Effector* e = lookup(a.verb())) return e->execute(a);
    if (a.is_noop()) return Feedback{a, "noop", true, Timestamp{clock_.now_nanos(), 0}};
    throw CapabilityMismatch(a.verb());
}

events::RawInput feedback_to_input(const Feedback& f) {
    return events::RawInput{Source::feedback, render_action(f.action) + " -> " + f.outcome, f.emitted_at};
}

}  // namespace evagent::effectors
