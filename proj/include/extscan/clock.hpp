#pragma once

#include <cstdint>
#include <memory>
#include <mutex>

namespace extscan {

// Microseconds on an arbitrary monotonic epoch.
using Micros = uint64_t;

class Clock {
  public:
    virtual ~Clock() = default;
    virtual Micros now() = 0;
    virtual void sleep_until(Micros deadline) = 0;
};

class SystemClock : public Clock {
  public:
    Micros now() override;
    void sleep_until(Micros deadline) override;
};

// Manual clock for tests: sleep_until() just advances virtual time.
class SimClock : public Clock {
  public:
    Micros now() override;
    void sleep_until(Micros deadline) override;
    void advance(Micros delta);

  private:
    std::mutex mu_;
    Micros now_ = 0;
};

Clock& system_clock();

// Paces callers to at most `rate_per_sec` acquisitions per second by
// enforcing a minimum spacing between grants. acquire() blocks (on the
// injected clock) until the next slot is available and returns the grant
// timestamp.
class RateLimiter {
  public:
    RateLimiter(double rate_per_sec, Clock* clock = nullptr);

    Micros acquire();
    double rate_per_sec() const { return rate_per_sec_; }

  private:
    double rate_per_sec_;
    Micros min_interval_;
    Clock* clock_;
    std::mutex mu_;
    Micros next_slot_ = 0;
};

} // namespace extscan
