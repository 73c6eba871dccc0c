#include "evagent/prompts/prompts.hpp"

#include "evagent/embedded_prompts.hpp"

namespace evagent::prompts {

std::string_view stage_tag(Stage s) noexcept {
    switch (s) {
        case Stage::event_generation: return "### event-generation";
        case Stage::candidate_generation: return "### candidate-generation";
        case Stage::dispatch: return "### dispatch";
    }
    return "";
}

std::string_view default_system_prompt(Stage s) noexcept {
    switch (s) {
        case Stage::event_generation: return embedded::event_generator;
        case Stage::candidate_generation: return embedded::candidate_generator;
        case Stage::dispatch: return embedded::dispatcher;
    }
    return "";
}

std::string strip_code_fence(std::string_view reply) {
    auto trim = [](std::string_view s) {
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string_view::npos) return std::string_view{};
        const auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    };
    std::string_view s = trim(reply);
    if (s.starts_with("```") && s.size() >= 6 && s.ends_with("```")) {
        s.remove_suffix(3);
        const auto nl = s.find('\n');
        s = nl == std::string_view::npos ? std::string_view{} : s.substr(nl + 1);
        s = trim(s);
    }
    return std::string(s);
}

}  // namespace evagent::prompts
