#include "tierfact/http/cache.hpp"

#include <nlohmann/json.hpp>

#include "tierfact/errors.hpp"
#include "tierfact/util/jsonio.hpp"
#include "tierfact/util/sha256.hpp"
#include "tierfact/util/strings.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace tierfact::http {

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
}

std::string DiskCache::key_for(const HttpRequest& request) {
  return util::sha256_hex(request.cache_descriptor());
}

fs::path DiskCache::entry_path(const std::string& key) const {
  return dir_ / key.substr(0, 2) / (key + ".json");
}

DiskCache::Lookup DiskCache::lookup(const std::string& key) const {
  const fs::path path = entry_path(key);
  if (!fs::exists(path)) return {State::Miss, {}};
  json entry;
  try {
    entry = util::read_json_file(path);
  } catch (const std::exception&) {
    return {State::Corrupt, {}};
  }
  if (!entry.is_object() || !entry.contains("response")) {
    return {State::Corrupt, {}};
  }
  const json& resp = entry["response"];
  if (!resp.contains("status")) return {State::Corrupt, {}};
  HttpResponse response;
  response.status = resp["status"].get<int>();
  response.content_type = resp.value("content_type", "");
  if (resp.contains("body")) {
    response.body = resp["body"].get<std::string>();
  } else {
    return {State::Corrupt, {}};
  }
  return {State::Hit, std::move(response)};
}

void DiskCache::put(const std::string& key, const HttpRequest& request,
                    const HttpResponse& response) const {
  // Bodies from the APIs this tool talks to are UTF-8 JSON or plain text;
  // anything else would not survive a JSON string, so reject it loudly.
  if (!util::is_valid_utf8(response.body)) {
    throw ProtocolError("refusing to cache non-UTF-8 response body for " +
                        request.url);
  }
  json entry = {
      {"request",
       {{"method", request.method},
        {"url", request.url},
        {"body", request.body}}},
      {"response",
       {{"status", response.status},
        {"content_type", response.content_type},
        {"body", response.body}}},
  };
  util::write_json_file(entry_path(key), entry);
}

}  // namespace tierfact::http
