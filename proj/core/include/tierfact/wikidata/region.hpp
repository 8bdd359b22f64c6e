#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tierfact/common.hpp"

namespace tierfact::wikidata {

/// Country QID -> region mapping. Shipped as editable JSON config since the
/// aggregation into four regions is a project choice, not Wikidata content.
class RegionTable {
 public:
  RegionTable() = default;

  static RegionTable from_json(const nlohmann::json& j);
  static RegionTable load(const std::filesystem::path& path);

  void set(const std::string& qid, Region region);
  bool contains(const std::string& qid) const;

  /// First location QID present in the table wins; none present -> Unknown.
  /// Total function, never throws.
  Region resolve(const std::vector<std::string>& location_qids) const;

  size_t size() const { return map_.size(); }

 private:
  std::map<std::string, Region> map_;
};

}  // namespace tierfact::wikidata
