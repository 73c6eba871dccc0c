#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "evagent/events/event_generator.hpp"
#include "evagent/model/errors.hpp"
#include "evagent/model/event.hpp"
#include "evagent/model/timestamp.hpp"

namespace evagent::effectors {

class CapabilityMismatch : public Error {
public:
    explicit CapabilityMismatch(Verb v)
        : Error("effector cannot execute '" + std::string(verb_name(v)) + "'"), verb_(v) {}
    Verb verb() const noexcept { return verb_; }

private:
    Verb verb_;
};

// Thrown by effector implementations; execute() turns it into a failed
// Feedback.
class EnvironmentError : public Error {
public:
    using Error::Error;
};

// Executes actions against something outside the agent. noop is accepted by
// every effector as a successful no-effect action.
class Effector {
public:
    Effector(std::set<Verb> capabilities, Clock& clock) : capabilities_(std::move(capabilities)), clock_(clock) {}
    virtual ~Effector() = default;

    const std::set<Verb>& capabilities() const noexcept { return capabilities_; }
    bool can_execute(Verb v) const noexcept { return v == Verb::noop || capabilities_.contains(v); }

    // Throws CapabilityMismatch; environment failures become success=false.
    Feedback execute(const Action& a);

protected:
    // Returns the outcome text; throws EnvironmentError on failure.
    virtual std::string perform(const Action& a) = 0;
    virtual std::string perform_noop() { return "noop"; }

private:
    std::set<Verb> capabilities_;
    Clock& clock_;
};

// Binds verbs to effectors. noop goes to the effector bound to noop, or is
// answered directly when none is.
class EffectorRegistry {
public:
    explicit EffectorRegistry(Clock& clock) : clock_(clock) {}

    // Throws CapabilityMismatch if the effector cannot run the verb.
    void bind(Verb v, std::shared_ptr<Effector> effector);
    Effector* lookup(Verb v) const;

    // Throws CapabilityMismatch when no effector is bound to the verb.
    Feedback execute(const Action& a);

private:
    Clock& clock_;
    std::map<Verb, std::shared_ptr<Effector>> bindings_;
};

// RawInput{feedback, "<rendered action> -> <outcome>"}.
events::RawInput feedback_to_input(const Feedback& f);

}  // namespace evagent::effectors
