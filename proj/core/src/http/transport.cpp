#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "tierfact/http/transport.hpp"

#include <fmt/format.h>

#include "tierfact/errors.hpp"

namespace tierfact::http {

std::string HttpRequest::cache_descriptor() const {
  return fmt::format("{}\n{}\n{}", method, url, body);
}

std::pair<std::string, std::string> split_url(const std::string& url) {
  const size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ValidationError(fmt::format("URL missing scheme: {}", url));
  }
  const size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path_start), url.substr(path_start)};
}

HttplibTransport::HttplibTransport(int timeout_sec)
    : timeout_sec_(timeout_sec) {}

HttpResponse HttplibTransport::perform(const HttpRequest& request) {
  const auto [origin, target] = split_url(request.url);
  httplib::Client client(origin);
  client.set_connection_timeout(timeout_sec_);
  client.set_read_timeout(timeout_sec_);
  client.set_follow_location(true);
  httplib::Headers headers;
  for (const auto& [name, value] : request.headers) {
    headers.emplace(name, value);
  }
  httplib::Result result;
  if (request.method == "GET") {
    result = client.Get(target, headers);
  } else if (request.method == "POST") {
    result = client.Post(target, headers, request.body,
                         request.content_type.empty()
                             ? "application/x-www-form-urlencoded"
                             : request.content_type);
  } else {
    throw ValidationError(
        fmt::format("unsupported HTTP method: {}", request.method));
  }
  if (!result) {
    throw TransportError(fmt::format("{} {}: {}", request.method, request.url,
                                     httplib::to_string(result.error())));
  }
  HttpResponse response;
  response.status = result->status;
  response.body = result->body;
  auto it = result->headers.find("Content-Type");
  if (it != result->headers.end()) response.content_type = it->second;
  return response;
}

HttpResponse NullTransport::perform(const HttpRequest& request) {
  throw TransportError(fmt::format(
      "network access attempted in replay mode: {} {}", request.method,
      request.url));
}

}  // namespace tierfact::http
