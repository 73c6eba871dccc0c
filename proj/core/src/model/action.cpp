#include "evagent/model/action.hpp"

#include <cctype>
#include <stdexcept>

#include "evagent/model/errors.hpp"

namespace evagent {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_space() {
        while (!done() && is_space(peek())) ++pos;
    }

    void expect(char c, const char* what) {
        if (done()) throw ParseError(pos, std::string("expected ") + what + ", got end of input");
        if (peek() != c) throw ParseError(pos, std::string("expected ") + what);
        ++pos;
    }

    void expect_end() {
        skip_space();
        if (!done()) throw ParseError(pos, "trailing characters");
    }
};

std::string_view read_word(Cursor& c) {
    const std::size_t start = c.pos;
    while (!c.done() && c.peek() >= 'a' && c.peek() <= 'z') ++c.pos;
    // Uppercase or digits glued to the verb make it an unknown verb, not a
    // bracket error.
    while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_')) ++c.pos;
    return c.text.substr(start, c.pos - start);
}

Verb read_verb(Cursor& c) {
    const std::size_t start = c.pos;
    const auto word = read_word(c);
    if (word.empty()) throw ParseError(start, "expected a verb");
    const auto verb = verb_from_name(word);
    if (!verb) throw ParseError(start, "unknown verb '" + std::string(word) + "'");
    return *verb;
}

std::string read_quoted(Cursor& c) {
    c.expect('"', "'\"' (argument must be quoted)");
    std::string out;
    while (true) {
        if (c.done()) throw ParseError(c.pos, "unterminated string");
        const char ch = c.peek();
        if (ch == '"') {
            ++c.pos;
            break;
        }
        if (ch == '\\') {
            ++c.pos;
            if (c.done()) throw ParseError(c.pos, "unterminated string");
            const char esc = c.peek();
            if (esc != '"' && esc != '\\') throw ParseError(c.pos, "invalid escape");
            out.push_back(esc);
            ++c.pos;
            continue;
        }
        out.push_back(ch);
        ++c.pos;
    }
    return out;
}

void append_escaped(std::string& out, std::string_view arg) {
    out.push_back('"');
    for (char ch : arg) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    out.push_back('"');
}

}  // namespace

std::string_view verb_name(Verb v) noexcept {
    switch (v) {
        case Verb::search: return "search";
        case Verb::click: return "click";
        case Verb::noop: return "noop";
    }
    return "noop";
}

std::optional<Verb> verb_from_name(std::string_view name) noexcept {
    if (name == "search") return Verb::search;
    if (name == "click") return Verb::click;
    if (name == "noop") return Verb::noop;
    return std::nullopt;
}

Action::Action(Verb verb, std::string arg) : verb_(verb), arg_(std::move(arg)) {
    if (verb_ == Verb::noop) {
        if (!arg_.empty()) throw std::invalid_argument("noop takes no argument");
    } else if (arg_.empty()) {
        throw std::invalid_argument(std::string(verb_name(verb_)) + " requires a non-empty argument");
    }
}

Action parse_action(std::string_view text) {
    Cursor c{text};
    c.skip_space();
    const Verb verb = read_verb(c);
    if (verb == Verb::noop) {
        c.expect_end();
        return Action::noop();
    }
    c.expect('[', "'['");
    const std::size_t arg_pos = c.pos;
    std::string arg = read_quoted(c);
    if (arg.empty()) throw ParseError(arg_pos, "empty argument");
    c.expect(']', "']'");
    c.expect_end();
    return Action(verb, std::move(arg));
}

std::string render_action(const Action& a) {
    std::string out(verb_name(a.verb()));
    if (a.is_noop()) return out;
    out.push_back('[');
    append_escaped(out, a.arg());
    out.push_back(']');
    return out;
}

ActionPattern parse_pattern(std::string_view text) {
    Cursor c{text};
    c.skip_space();
    const std::size_t start = c.pos;
    const Verb verb = read_verb(c);
    if (verb != Verb::noop && !c.done() && c.peek() == '[' && c.pos + 1 < text.size() &&
        text[c.pos + 1] == '*') {
        c.pos += 2;
        c.expect(']', "']'");
        c.expect_end();
        return ActionPattern::any(verb);
    }
    return ActionPattern::exact(parse_action(text.substr(start)));
}

std::string render_pattern(const ActionPattern& p) {
    if (p.is_wildcard()) return std::string(verb_name(p.verb())) + "[*]";
    return render_action(p.action());
}

}  // namespace evagent
