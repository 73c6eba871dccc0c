#pragma once

#include <string>
#include <string_view>

namespace evagent::prompts {

enum class Stage { event_generation, candidate_generation, dispatch };

// Header line that opens every user message of a stage, e.g.
// "### candidate-generation". Scripts match on it.
std::string_view stage_tag(Stage s) noexcept;

// Built-in system prompt for a stage; identical to the shipped asset in
// data/prompts/.
std::string_view default_system_prompt(Stage s) noexcept;

// Removes surrounding whitespace and a Markdown code fence, if present.
std::string strip_code_fence(std::string_view reply);

}  // namespace evagent::prompts
