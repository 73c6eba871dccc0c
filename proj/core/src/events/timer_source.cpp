#include "evagent/events/timer_source.hpp"

#include <condition_variable>
#include <mutex>

#include "evagent/model/errors.hpp"

namespace evagent::events {

TimerSource::TimerSource(std::chrono::nanoseconds interval, Sink sink)
    : interval_(interval), sink_(std::move(sink)) {
    if (interval_.count() <= 0) throw ConfigError("timer interval must be positive");
    if (!sink_) throw ConfigError("timer source needs a sink");
}

TimerSource::~TimerSource() { stop(); }

void TimerSource::start() {
    if (thread_.joinable()) return;
    thread_ = std::jthread([this](std::stop_token st) { run(st); });
}

void TimerSource::stop() {
    if (!thread_.joinable()) return;
    thread_.request_stop();
    thread_.join();
    thread_ = std::jthread{};
}

void TimerSource::run(std::stop_token stop) {
    std::mutex mu;
    std::condition_variable_any cv;
    const auto origin = std::chrono::steady_clock::now();
    std::uint64_t tick = 0;
    while (!stop.stop_requested()) {
        const auto deadline = origin + interval_ * (tick + 1);
        {
            std::unique_lock lock(mu);
            cv.wait_until(lock, stop, deadline, [] { return false; });
        }
        if (stop.stop_requested()) return;
        ++tick;
        const auto wall = std::chrono::duration_cast<std::chrono::nanoseconds>(
                              std::chrono::system_clock::now().time_since_epoch())
                              .count();
        sink_(RawInput{Source::timer, "timer tick " + std::to_string(tick), Timestamp{wall, 0}});
        emitted_.fetch_add(1);
    }
}

}  // namespace evagent::events
