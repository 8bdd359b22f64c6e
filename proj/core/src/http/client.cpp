#include "tierfact/http/client.hpp"

#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "tierfact/errors.hpp"

namespace tierfact::http {

CachingHttpClient::CachingHttpClient(std::shared_ptr<HttpTransport> transport,
                                     DiskCache cache, FetchMode mode,
                                     RetryPolicy retry,
                                     std::shared_ptr<RateLimiter> limiter)
    : transport_(std::move(transport)),
      cache_(std::move(cache)),
      mode_(mode),
      retry_(retry),
      limiter_(std::move(limiter)) {}

static bool is_retryable_status(int status) {
  return status == 429 || status >= 500;
}

HttpResponse CachingHttpClient::perform_with_retries(
    const HttpRequest& request) {
  std::vector<std::string> attempts;
  auto backoff = retry_.initial_backoff;
  for (int attempt = 1; attempt <= retry_.max_attempts; ++attempt) {
    if (limiter_) limiter_->acquire(split_url(request.url).first);
    network_calls_.fetch_add(1);
    try {
      HttpResponse response = transport_->perform(request);
      if (!is_retryable_status(response.status)) {
        return response;
      }
      attempts.push_back(fmt::format("attempt {}: HTTP {}", attempt,
                                     response.status));
    } catch (const TransportError& e) {
      attempts.push_back(fmt::format("attempt {}: {}", attempt, e.what()));
    }
    if (attempt < retry_.max_attempts) {
      spdlog::debug("retrying {} {} in {} ms", request.method, request.url,
                    backoff.count());
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::milliseconds(static_cast<long>(
          static_cast<double>(backoff.count()) * retry_.backoff_multiplier));
    }
  }
  throw TransportError(
      fmt::format("{} {} failed after {} attempts", request.method,
                  request.url, retry_.max_attempts),
      attempts);
}

HttpResponse CachingHttpClient::fetch(const HttpRequest& request) {
  const std::string key = DiskCache::key_for(request);
  const auto cached = cache_.lookup(key);
  if (cached.state == DiskCache::State::Hit) {
    return cached.response;
  }
  if (mode_ == FetchMode::Replay) {
    if (cached.state == DiskCache::State::Corrupt) {
      throw CacheMissError(fmt::format(
          "replay mode: corrupt cache entry {} for {} {}", key,
          request.method, request.url));
    }
    throw CacheMissError(fmt::format("replay mode: no cache entry for {} {}",
                                     request.method, request.url));
  }
  if (cached.state == DiskCache::State::Corrupt) {
    spdlog::warn("corrupt cache entry {} for {}; refetching", key,
                 request.url);
  }
  HttpResponse response = perform_with_retries(request);
  cache_.put(key, request, response);
  return response;
}

}  // namespace tierfact::http
