#include "evagent/model/timestamp.hpp"

#include <chrono>

namespace evagent {

std::int64_t SystemClock::now_nanos() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

}  // namespace evagent
