#pragma once

#include <map>
#include <memory>
#include <string>

namespace tierfact::http {

struct HttpRequest {
  std::string method = "GET";
  std::string url;  // absolute: scheme://host[:port]/path?query
  std::string body;
  std::string content_type;
  std::map<std::string, std::string> headers;

  /// Stable textual form hashed for cache keys. Headers are excluded so that
  /// auth tokens never influence (or leak into) the cache.
  std::string cache_descriptor() const;
};

struct HttpResponse {
  int status = 0;
  std::string body;
  std::string content_type;
};

/// Minimal blocking transport. Implementations must be safe to call from
/// multiple threads.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  /// Performs the request. Network-level failures throw TransportError;
  /// any HTTP status is returned, not thrown.
  virtual HttpResponse perform(const HttpRequest& request) = 0;
};

/// Transport backed by cpp-httplib. Supports http and https.
class HttplibTransport final : public HttpTransport {
 public:
  explicit HttplibTransport(int timeout_sec = 30);
  HttpResponse perform(const HttpRequest& request) override;

 private:
  int timeout_sec_;
};

/// Transport that refuses every request. Backs replay mode, where touching
/// the network is a bug.
class NullTransport final : public HttpTransport {
 public:
  HttpResponse perform(const HttpRequest& request) override;
};

/// Splits an absolute URL into origin ("https://host:port") and target
/// ("/path?query"). Throws ValidationError on malformed input.
std::pair<std::string, std::string> split_url(const std::string& url);

}  // namespace tierfact::http
