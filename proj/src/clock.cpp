#include "extscan/clock.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace extscan {

Micros SystemClock::now() {
    auto t = std::chrono::steady_clock::now().time_since_epoch();
    return static_cast<Micros>(std::chrono::duration_cast<std::chrono::microseconds>(t).count());
}

void SystemClock::sleep_until(Micros deadline) {
    Micros current = now();
    if (deadline > current) {
        std::this_thread::sleep_for(std::chrono::microseconds(deadline - current));
    }
}

Micros SimClock::now() {
    std::lock_guard<std::mutex> lock(mu_);
    return now_;
}

void SimClock::sleep_until(Micros deadline) {
    std::lock_guard<std::mutex> lock(mu_);
    now_ = std::max(now_, deadline);
}

void SimClock::advance(Micros delta) {
    std::lock_guard<std::mutex> lock(mu_);
    now_ += delta;
}

Clock& system_clock() {
    static SystemClock clock;
    return clock;
}

RateLimiter::RateLimiter(double rate_per_sec, Clock* clock)
    : rate_per_sec_(rate_per_sec > 0 ? rate_per_sec : 1.0),
      min_interval_(static_cast<Micros>(std::ceil(1e6 / (rate_per_sec > 0 ? rate_per_sec : 1.0)))),
      clock_(clock ? clock : &system_clock()) {}

Micros RateLimiter::acquire() {
    Micros slot;
    {
        std::lock_guard<std::mutex> lock(mu_);
        Micros current = clock_->now();
        slot = std::max(current, next_slot_);
        next_slot_ = slot + min_interval_;
    }
    clock_->sleep_until(slot);
    return slot;
}

} // namespace extscan
