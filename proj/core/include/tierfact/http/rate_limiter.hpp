#pragma once

#include <chrono>
#include <map>
#include <mutex>
#include <string>

namespace tierfact::http {

/// Per-host minimum-interval limiter shared by all clients of a run.
class RateLimiter {
 public:
  /// `requests_per_sec` <= 0 disables limiting.
  explicit RateLimiter(double requests_per_sec = 10.0);

  /// Blocks until a request to `host` is allowed, then reserves the slot.
  void acquire(const std::string& host);

 private:
  std::chrono::microseconds interval_;
  std::mutex mutex_;
  std::map<std::string, std::chrono::steady_clock::time_point> next_allowed_;
};

}  // namespace tierfact::http
