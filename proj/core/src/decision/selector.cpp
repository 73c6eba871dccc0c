#include "evagent/decision/selector.hpp"

#include <algorithm>

#include "evagent/model/errors.hpp"
#include "evagent/model/json.hpp"
#include "evagent/prompts/prompts.hpp"

namespace evagent::decision {

using nlohmann::json;
using prompts::Stage;

CandidateSet filter_candidates(const std::string& reply, const Event& e, TraceSink& trace) {
    CandidateSet cs;
    cs.event_id = e.id;
    const json items = json::parse(prompts::strip_code_fence(reply), nullptr, false);
    if (!items.is_array()) {
        trace.emit("decision.malformed_candidates", {{"event_id", e.id}, {"reply", reply}});
        return cs;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        const json& item = items[i];
        std::string text, rationale;
        if (item.is_string()) {
            text = item.get<std::string>();
        } else if (item.is_object() && item.contains("action") && item["action"].is_string()) {
            text = item["action"].get<std::string>();
            if (auto r = item.find("rationale"); r != item.end() && r->is_string()) rationale = r->get<std::string>();
        } else {
            trace.emit("decision.candidate_rejected", {{"event_id", e.id}, {"index", i}, {"reason", "not an action entry"}});
            continue;
        }
        Action a;
        try {
            a = parse_action(text);
        } catch (const ParseError& err) {
            trace.emit("decision.candidate_rejected", {{"event_id", e.id}, {"index", i}, {"reason", err.what()}});
            continue;
        }
        if (!e.permits(a)) {
            trace.emit("decision.candidate_rejected",
                       {{"event_id", e.id}, {"index", i}, {"action", text}, {"reason", "not available"}});
            continue;
        }
        if (cs.candidates.size() == kMaxCandidates) {
            trace.emit("decision.candidates_truncated", {{"event_id", e.id}, {"from_index", i}});
            break;
        }
        cs.candidates.push_back(std::move(a));
        cs.rationales.push_back(std::move(rationale));
    }
    return cs;
}

std::optional<std::size_t> parse_dispatch_reply(const std::string& reply, std::size_t candidate_count) {
    const std::string text = prompts::strip_code_fence(reply);
    if (text == "noop") return std::nullopt;
    if (text.empty() || text.size() > 3 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(0, "dispatcher reply must be a candidate number or noop");
    const std::size_t index = std::stoul(text);
    if (index < 1 || index > candidate_count)
        throw ParseError(0, "candidate number " + text + " out of range 1.." + std::to_string(candidate_count));
    return index - 1;
}

ActionSelector::ActionSelector(provider::ReasoningProvider& provider, memory::MemoryStore& memory, Clock& clock,
                               IdSequence& decision_ids, SelectorConfig cfg, TraceSink& trace)
    : provider_(provider), memory_(memory), clock_(clock), decision_ids_(decision_ids), cfg_(std::move(cfg)), trace_(trace) {
    if (cfg_.candidate_prompt.empty())
        cfg_.candidate_prompt = std::string(prompts::default_system_prompt(Stage::candidate_generation));
    if (cfg_.dispatch_prompt.empty()) cfg_.dispatch_prompt = std::string(prompts::default_system_prompt(Stage::dispatch));
}

namespace {

void append_list(std::string& msg, const char* title, const std::vector<std::string>& lines) {
    msg += title;
    msg += ":\n";
    if (lines.empty()) msg += "(none)\n";
    for (const auto& l : lines) {
        msg += "- ";
        msg += l;
        msg += '\n';
    }
}

}  // namespace

std::string ActionSelector::candidate_message(const Event& e, const memory::MemoryContext& ctx,
                                              std::span<const Event> peers,
                                              const std::vector<std::string>& tasks) const {
    std::string msg(prompts::stage_tag(Stage::candidate_generation));
    msg += "\nevent:\n";
    msg += json(e).dump();
    msg += '\n';
    append_list(msg, "memory (old facts)", ctx.old_facts);
    append_list(msg, "memory (short-term)", ctx.short_term);
    append_list(msg, "active tasks", tasks);
    std::vector<std::string> peer_lines;
    for (const auto& p : peers) peer_lines.push_back("[" + std::string(source_name(p.source)) + "] " + p.intent + " (" + p.id + ")");
    append_list(msg, "other pending events", peer_lines);
    return msg;
}

std::string ActionSelector::dispatch_message(const CandidateSet& cs, const Event& e, const memory::MemoryContext& ctx,
                                             const std::vector<std::string>& tasks) const {
    std::string msg(prompts::stage_tag(Stage::dispatch));
    msg += "\nintent: " + e.intent;
    msg += "\ninstruction: " + e.instruction + "\n";
    append_list(msg, "active tasks", tasks);
    append_list(msg, "memory (old facts)", ctx.old_facts);
    append_list(msg, "memory (short-term)", ctx.short_term);
    msg += "candidates:\n";
    for (std::size_t i = 0; i < cs.candidates.size(); ++i) {
        msg += std::to_string(i + 1) + ". " + render_action(cs.candidates[i]);
        if (i < cs.rationales.size() && !cs.rationales[i].empty()) msg += " -- " + cs.rationales[i];
        msg += '\n';
    }
    return msg;
}

CandidateSet ActionSelector::generate_candidates(const Event& e, const memory::MemoryContext& ctx,
                                                 std::span<const Event> peers, const std::vector<std::string>& tasks) {
    const auto reply =
        provider_.complete(provider::make_request(cfg_.candidate_prompt, candidate_message(e, ctx, peers, tasks)));
    return filter_candidates(reply.content, e, trace_);
}

Decision ActionSelector::make_decision(const Event& e, const Action& chosen, std::size_t count, std::uint64_t version) {
    Decision d;
    d.id = decision_ids_.next();
    d.event_id = e.id;
    d.chosen = chosen;
    d.candidate_count = count;
    d.memory_version = version;
    d.decided_at = Timestamp{clock_.now_nanos(), decision_ids_.issued()};
    return d;
}

Decision ActionSelector::dispatch(const CandidateSet& cs, const Event& e, const memory::MemoryContext& ctx,
                                  const std::vector<std::string>& tasks) {
    const std::size_t n = cs.candidates.size();
    if (n == 0) return make_decision(e, Action::noop(), 0, ctx.version);

    std::string reply;
    try {
        reply = provider_.complete(provider::make_request(cfg_.dispatch_prompt, dispatch_message(cs, e, ctx, tasks))).content;
    } catch (const provider::ProviderError& err) {
        trace_.emit("decision.dispatch_error", {{"event_id", e.id}, {"error", err.what()}});
        return make_decision(e, Action::noop(), n, ctx.version);
    }
    try {
        const auto index = parse_dispatch_reply(reply, n);
        return make_decision(e, index ? cs.candidates[*index] : Action::noop(), n, ctx.version);
    } catch (const ParseError& err) {
        trace_.emit("decision.dispatch_rejected", {{"event_id", e.id}, {"reply", reply}, {"reason", err.reason()}});
        return make_decision(e, Action::noop(), n, ctx.version);
    }
}

std::optional<Cycle> ActionSelector::select_action(events::EventQueue& queue, std::int64_t now_nanos,
                                                   const std::vector<std::string>& tasks) {
    auto popped = queue.pop_latest(now_nanos);
    if (!popped.event) return std::nullopt;

    Cycle cycle;
    cycle.event = std::move(*popped.event);
    const Event& e = cycle.event;
    cycle.memory = memory_.retrieve(e, cfg_.limits);
    const auto peers = queue.snapshot();

    try {
        cycle.candidates = generate_candidates(e, cycle.memory, peers, tasks);
    } catch (const provider::ProviderError& err) {
        cycle.generation_failed = true;
        cycle.candidates = CandidateSet{e.id, {}, {}};
        const bool first_failure = readmitted_.insert(e.id).second;
        if (first_failure) queue.readmit(e);
        trace_.emit("decision.generation_failed",
                    {{"event_id", e.id}, {"error", err.what()}, {"readmitted", first_failure}});
    }
    cycle.decision = dispatch(cycle.candidates, e, cycle.memory, tasks);
    return cycle;
}

}  // namespace evagent::decision
