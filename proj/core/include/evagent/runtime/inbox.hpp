#pragma once

#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <vector>

#include "evagent/events/event_generator.hpp"

namespace evagent::runtime {

// Raw inputs waiting for the event generator. Producers post from any
// thread; the decision loop drains.
class Inbox {
public:
    void post(events::RawInput in) {
        {
            std::lock_guard lock(mu_);
            pending_.push_back(std::move(in));
        }
        cv_.notify_one();
    }

    std::vector<events::RawInput> drain() {
        std::lock_guard lock(mu_);
        std::vector<events::RawInput> out(std::make_move_iterator(pending_.begin()), std::make_move_iterator(pending_.end()));
        pending_.clear();
        return out;
    }

    bool wait_for(std::chrono::milliseconds timeout) {
        std::unique_lock lock(mu_);
        return cv_.wait_for(lock, timeout, [&] { return !pending_.empty(); });
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<events::RawInput> pending_;
};

}  // namespace evagent::runtime
