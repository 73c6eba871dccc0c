#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace evagent {

enum class Verb { search, click, noop };

std::string_view verb_name(Verb v) noexcept;
// Looks up a verb by its exact (lowercase) name.
std::optional<Verb> verb_from_name(std::string_view name) noexcept;

// An executable command: `search["..."]`, `click["..."]` or `noop`.
class Action {
public:
    Action() = default;  // noop

    static Action noop() { return Action{}; }
    static Action search(std::string arg) { return Action(Verb::search, std::move(arg)); }
    static Action click(std::string arg) { return Action(Verb::click, std::move(arg)); }

    // Throws std::invalid_argument when a search/click argument is empty.
    Action(Verb verb, std::string arg);

    Verb verb() const noexcept { return verb_; }
    const std::string& arg() const noexcept { return arg_; }
    bool is_noop() const noexcept { return verb_ == Verb::noop; }

    friend bool operator==(const Action&, const Action&) = default;

private:
    Verb verb_ = Verb::noop;
    std::string arg_;
};

// Grammar:
//   action := ws ( "noop" | verb "[" quoted "]" ) ws
//   verb   := "search" | "click"
//   quoted := '"' ( [^"\\] | '\"' | '\\' )+ '"'
// Throws ParseError on anything else.
Action parse_action(std::string_view text);

// Canonical form; parse_action(render_action(a)) == a.
std::string render_action(const Action& a);

// An entry of an event's available-action list: either an exact action or
// the wildcard `verb[*]`, which admits any argument for that verb.
class ActionPattern {
public:
    static ActionPattern exact(Action a) { return ActionPattern(a.verb(), false, std::move(a)); }
    // `noop` has no argument, so any(Verb::noop) is the exact noop pattern.
    static ActionPattern any(Verb verb) {
        return ActionPattern(verb, verb != Verb::noop, Action{});
    }

    Verb verb() const noexcept { return verb_; }
    bool is_wildcard() const noexcept { return wildcard_; }
    // Meaningful only for non-wildcard patterns.
    const Action& action() const noexcept { return exact_; }

    bool matches(const Action& a) const noexcept {
        if (wildcard_) return a.verb() == verb_;
        return a == exact_;
    }

    friend bool operator==(const ActionPattern&, const ActionPattern&) = default;

private:
    ActionPattern(Verb verb, bool wildcard, Action exact)
        : verb_(verb), wildcard_(wildcard), exact_(std::move(exact)) {}

    Verb verb_;
    bool wildcard_;
    Action exact_;
};

ActionPattern parse_pattern(std::string_view text);
std::string render_pattern(const ActionPattern& p);

}  // namespace evagent
