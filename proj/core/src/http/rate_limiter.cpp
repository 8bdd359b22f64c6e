#include "tierfact/http/rate_limiter.hpp"

#include <thread>

namespace tierfact::http {

RateLimiter::RateLimiter(double requests_per_sec)
    : interval_(requests_per_sec > 0
                    ? std::chrono::microseconds(
                          static_cast<long>(1e6 / requests_per_sec))
                    : std::chrono::microseconds(0)) {}

void RateLimiter::acquire(const std::string& host) {
  if (interval_.count() == 0) return;
  std::chrono::steady_clock::time_point wait_until;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto now = std::chrono::steady_clock::now();
    auto& slot = next_allowed_[host];
    if (slot < now) slot = now;
    wait_until = slot;
    slot += interval_;
  }
  std::this_thread::sleep_until(wait_until);
}

}  // namespace tierfact::http
