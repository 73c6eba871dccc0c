#include "evagent/events/event_queue.hpp"

#include "evagent/model/errors.hpp"

namespace evagent::events {

EventQueue::EventQueue(QueueConfig cfg, TraceSink& trace) : cfg_(cfg), trace_(trace) {
    if (cfg_.capacity == 0) throw ConfigError("queue capacity must be positive");
    if (cfg_.ttl.count() <= 0) throw ConfigError("queue ttl must be positive");
}

Admission EventQueue::push(Event e) {
    Admission result;
    {
        std::lock_guard lock(mu_);
        e.ts.seq = next_seq_++;
        result = admit_locked(std::move(e));
    }
    cv_.notify_one();
    return result;
}

Admission EventQueue::readmit(Event e) {
    Admission result;
    {
        std::lock_guard lock(mu_);
        if (buffer_.contains(e.ts)) {
            // Only possible for an event that was never popped.
            e.ts.seq = next_seq_++;
        }
        result = admit_locked(std::move(e));
    }
    cv_.notify_one();
    return result;
}

Admission EventQueue::admit_locked(Event e) {
    Admission result;
    result.assigned = e.ts;
    const std::string id = e.id;
    buffer_.emplace(e.ts, std::move(e));
    ++admitted_;
    if (buffer_.size() > cfg_.capacity) {
        auto oldest = buffer_.begin();
        result.evicted = std::move(oldest->second);
        buffer_.erase(oldest);
        trace_.emit("queue.evicted", {{"event_id", result.evicted->id}, {"admitted", id}});
    }
    return result;
}

PopResult EventQueue::pop_latest(std::int64_t now_nanos) {
    PopResult out;
    std::lock_guard lock(mu_);
    const std::int64_t ttl = cfg_.ttl.count();
    // Ordered by wall time first, so stale events form a prefix.
    while (!buffer_.empty() && now_nanos - buffer_.begin()->first.wall_nanos > ttl) {
        auto node = buffer_.extract(buffer_.begin());
        trace_.emit("queue.expired", {{"event_id", node.mapped().id}});
        out.expired.push_back(std::move(node.mapped()));
    }
    if (!buffer_.empty()) {
        auto node = buffer_.extract(std::prev(buffer_.end()));
        out.event = std::move(node.mapped());
    }
    return out;
}

std::vector<Event> EventQueue::snapshot() const {
    std::lock_guard lock(mu_);
    std::vector<Event> out;
    out.reserve(buffer_.size());
    for (auto it = buffer_.rbegin(); it != buffer_.rend(); ++it) out.push_back(it->second);
    return out;
}

bool EventQueue::wait_nonempty(std::chrono::milliseconds timeout) const {
    std::unique_lock lock(mu_);
    return cv_.wait_for(lock, timeout, [&] { return !buffer_.empty(); });
}

std::vector<Event> EventQueue::clear() {
    std::lock_guard lock(mu_);
    std::vector<Event> out;
    out.reserve(buffer_.size());
    for (auto& [ts, e] : buffer_) out.push_back(std::move(e));
    buffer_.clear();
    return out;
}

std::size_t EventQueue::size() const {
    std::lock_guard lock(mu_);
    return buffer_.size();
}

std::uint64_t EventQueue::admitted() const {
    std::lock_guard lock(mu_);
    return admitted_;
}

}  // namespace evagent::events
