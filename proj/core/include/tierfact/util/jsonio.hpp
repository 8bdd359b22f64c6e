#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace tierfact::util {

/// Canonical serialization: nlohmann keeps object keys sorted, so a bare
/// dump() with fixed separators is stable across runs and platforms.
std::string canonical_dump(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& path);

/// Writes via a sibling temp file + rename so readers never observe a
/// half-written file.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

nlohmann::json read_json_file(const std::filesystem::path& path);

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& j);

/// Relative path -> SHA-256 of content, for every regular file under `dir`,
/// in sorted path order. Used for output checksums and tree comparison.
std::map<std::string, std::string> tree_digest(
    const std::filesystem::path& dir);

}  // namespace tierfact::util
