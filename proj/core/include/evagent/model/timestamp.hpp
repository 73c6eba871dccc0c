#pragma once

#include <atomic>
#include <compare>
#include <cstdint>

namespace evagent {

// Wall-clock reading paired with the queue admission sequence number.
// Ordering is lexicographic on (wall_nanos, seq).
struct Timestamp {
    std::int64_t wall_nanos = 0;
    std::uint64_t seq = 0;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
    friend bool operator==(const Timestamp&, const Timestamp&) = default;
};

class Clock {
public:
    virtual ~Clock() = default;
    virtual std::int64_t now_nanos() = 0;
};

class SystemClock final : public Clock {
public:
    std::int64_t now_nanos() override;
};

// Deterministic clock: every reading advances by a fixed tick.
class LogicalClock final : public Clock {
public:
    explicit LogicalClock(std::int64_t start_nanos = 1'000'000'000,
                          std::int64_t tick_nanos = 1'000'000)
        : next_(start_nanos), tick_(tick_nanos) {}

    std::int64_t now_nanos() override { return next_.fetch_add(tick_); }

private:
    std::atomic<std::int64_t> next_;
    std::int64_t tick_;
};

}  // namespace evagent
