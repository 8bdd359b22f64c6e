#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <string>

#include "tierfact/http/cache.hpp"
#include "tierfact/http/rate_limiter.hpp"
#include "tierfact/http/transport.hpp"

namespace tierfact::http {

enum class FetchMode {
  Live,    // network allowed; every response is cached
  Replay,  // cache only; a miss is a hard error
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{250};
  double backoff_multiplier = 2.0;
};

/// Cache-through HTTP client. All remote calls in the toolkit go through
/// this, which is what makes full-pipeline replay possible.
///
/// Status handling: 429 and 5xx are retried with exponential backoff and
/// become TransportError once attempts are exhausted; everything else
/// (2xx, 3xx leftovers, 4xx) is cached and returned for the caller to
/// interpret — a 404 from the pageviews API is data, not a failure.
class CachingHttpClient {
 public:
  CachingHttpClient(std::shared_ptr<HttpTransport> transport, DiskCache cache,
                    FetchMode mode, RetryPolicy retry = {},
                    std::shared_ptr<RateLimiter> limiter = nullptr);

  HttpResponse fetch(const HttpRequest& request);

  FetchMode mode() const { return mode_; }
  const DiskCache& cache() const { return cache_; }

  /// Number of requests that actually hit the transport (not the cache).
  long network_calls() const { return network_calls_.load(); }

 private:
  HttpResponse perform_with_retries(const HttpRequest& request);

  std::shared_ptr<HttpTransport> transport_;
  DiskCache cache_;
  FetchMode mode_;
  RetryPolicy retry_;
  std::shared_ptr<RateLimiter> limiter_;
  std::atomic<long> network_calls_{0};
};

}  // namespace tierfact::http
