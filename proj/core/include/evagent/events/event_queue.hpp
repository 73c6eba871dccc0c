#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "evagent/model/event.hpp"
#include "evagent/model/trace.hpp"

namespace evagent::events {

struct QueueConfig {
    std::size_t capacity = 256;
    std::chrono::nanoseconds ttl = std::chrono::seconds(60);
};

struct Admission {
    Timestamp assigned;
    // Set when admitting pushed the oldest live event out.
    std::optional<Event> evicted;
};

struct PopResult {
    std::optional<Event> event;
    std::vector<Event> expired;
};

// Temporally ordered event buffer with many producers and one consumer.
// Consumption is most-recent-first; overflow drops the oldest event; events
// older than the ttl are expired on pop.
class EventQueue {
public:
    // Throws ConfigError for zero capacity or non-positive ttl.
    explicit EventQueue(QueueConfig cfg = {}, TraceSink& trace = TraceSink::null());

    // Admits `e` with a fresh sequence number (its wall_nanos is kept).
    Admission push(Event e);

    // Puts a previously popped event back at its original timestamp.
    Admission readmit(Event e);

    // Expires stale events relative to `now_nanos`, then removes and returns
    // the live event with the greatest (wall_nanos, seq).
    PopResult pop_latest(std::int64_t now_nanos);

    // Live events, newest first, without removing them.
    std::vector<Event> snapshot() const;

    // Blocks until the queue is non-empty or the timeout passes.
    bool wait_nonempty(std::chrono::milliseconds timeout) const;

    // Removes every event; returns them oldest first.
    std::vector<Event> clear();

    std::size_t size() const;
    std::size_t capacity() const noexcept { return cfg_.capacity; }
    std::uint64_t admitted() const;

private:
    Admission admit_locked(Event e);

    QueueConfig cfg_;
    TraceSink& trace_;
    mutable std::mutex mu_;
    mutable std::condition_variable cv_;
    std::map<Timestamp, Event> buffer_;
    std::uint64_t next_seq_ = 1;
    std::uint64_t admitted_ = 0;
};

}  // namespace evagent::events
