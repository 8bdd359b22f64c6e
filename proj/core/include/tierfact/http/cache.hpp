#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "tierfact/http/transport.hpp"

namespace tierfact::http {

/// Content-addressed response cache: one JSON file per request, named by the
/// SHA-256 of the request's cache descriptor. Writes are atomic, so readers
/// and writers may run concurrently.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  static std::string key_for(const HttpRequest& request);

  enum class State { Hit, Miss, Corrupt };
  struct Lookup {
    State state = State::Miss;
    HttpResponse response;
  };

  Lookup lookup(const std::string& key) const;
  void put(const std::string& key, const HttpRequest& request,
           const HttpResponse& response) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path entry_path(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace tierfact::http
