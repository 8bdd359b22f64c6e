#include "tierfact/util/jsonio.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "tierfact/errors.hpp"
#include "tierfact/util/sha256.hpp"

namespace fs = std::filesystem;

namespace tierfact::util {

std::string canonical_dump(const nlohmann::json& j) { return j.dump(); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(fmt::format("cannot open file: {}", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void atomic_write_file(const fs::path& path, std::string_view content) {
  fs::create_directories(path.parent_path());
  // Unique temp name per call; rename() within one directory is atomic.
  static std::atomic<uint64_t> counter{0};
  fs::path tmp = path;
  tmp += fmt::format(".tmp.{}", counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(fmt::format("cannot write file: {}", tmp.string()));
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error(fmt::format("short write: {}", tmp.string()));
    }
  }
  fs::rename(tmp, path);
}

nlohmann::json read_json_file(const fs::path& path) {
  const std::string raw = read_file(path);
  nlohmann::json j = nlohmann::json::parse(raw, nullptr, false);
  if (j.is_discarded()) {
    throw Error(fmt::format("invalid JSON in {}", path.string()));
  }
  return j;
}

void write_json_file(const fs::path& path, const nlohmann::json& j) {
  atomic_write_file(path, j.dump(2) + "\n");
}

std::map<std::string, std::string> tree_digest(const fs::path& dir) {
  std::map<std::string, std::string> digest;
  if (!fs::exists(dir)) return digest;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string rel = fs::relative(entry.path(), dir).generic_string();
    digest[rel] = sha256_hex(read_file(entry.path()));
  }
  return digest;
}

}  // namespace tierfact::util
