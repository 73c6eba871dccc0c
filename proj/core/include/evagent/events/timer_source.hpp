#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <thread>

#include "evagent/events/event_generator.hpp"

namespace evagent::events {

// Emits RawInput{source=timer} at every interval boundary on its own thread
// until stopped or destroyed.
class TimerSource {
public:
    using Sink = std::function<void(RawInput)>;

    // Throws ConfigError when interval <= 0.
    TimerSource(std::chrono::nanoseconds interval, Sink sink);
    ~TimerSource();

    TimerSource(const TimerSource&) = delete;
    TimerSource& operator=(const TimerSource&) = delete;

    void start();
    void stop();

    std::uint64_t emitted() const noexcept { return emitted_.load(); }
    bool running() const noexcept { return thread_.joinable(); }

private:
    void run(std::stop_token stop);

    std::chrono::nanoseconds interval_;
    Sink sink_;
    std::atomic<std::uint64_t> emitted_{0};
    std::jthread thread_;
};

}  // namespace evagent::events
