#include "tierfact/wikidata/region.hpp"

#include "tierfact/errors.hpp"
#include "tierfact/util/jsonio.hpp"

namespace tierfact::wikidata {

RegionTable RegionTable::from_json(const nlohmann::json& j) {
  RegionTable table;
  for (auto it = j.begin(); it != j.end(); ++it) {
    require_valid_qid(it.key(), "region table");
    table.set(it.key(), region_from_string(it.value().get<std::string>()));
  }
  return table;
}

RegionTable RegionTable::load(const std::filesystem::path& path) {
  return from_json(util::read_json_file(path));
}

void RegionTable::set(const std::string& qid, Region region) {
  map_[qid] = region;
}

bool RegionTable::contains(const std::string& qid) const {
  return map_.count(qid) > 0;
}

Region RegionTable::resolve(
    const std::vector<std::string>& location_qids) const {
  for (const auto& qid : location_qids) {
    auto it = map_.find(qid);
    if (it != map_.end()) return it->second;
  }
  return Region::Unknown;
}

}  // namespace tierfact::wikidata
