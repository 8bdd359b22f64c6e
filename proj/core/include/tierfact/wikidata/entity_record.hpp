#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tierfact/common.hpp"

namespace tierfact::wikidata {

/// One claim value. Quantities carry the raw amount plus the source unit
/// QID; lengths are additionally normalized to kilometres when the unit is
/// known.
struct AttributeValue {
  std::string raw;       // datavalue as given (amount string or item QID)
  double amount = 0.0;   // parsed amount for quantities
  std::string unit_qid;  // "1" for dimensionless
  std::optional<double> normalized_km;
};

struct EntityRecord {
  std::string qid;
  std::map<std::string, std::string> labels;       // language -> label
  std::map<std::string, std::string> wiki_titles;  // language -> page title
  std::vector<std::string> location_qids;
  Region region = Region::Unknown;
  std::map<std::string, AttributeValue> attributes;  // property -> value
  long long triple_count = 0;

  bool has_page(const std::string& language) const {
    return wiki_titles.count(language) > 0;
  }
};

void to_json(nlohmann::json& j, const AttributeValue& v);
void from_json(const nlohmann::json& j, AttributeValue& v);
void to_json(nlohmann::json& j, const EntityRecord& r);
void from_json(const nlohmann::json& j, EntityRecord& r);

/// Snapshot bookkeeping for one ingested class. The per-language counts form
/// the filter funnel: total >= with_label[L] >= with_page[L].
struct IngestManifest {
  std::string class_name;
  std::string snapshot;  // label such as "2024-12-31"; never wall-clock
  std::vector<std::string> endpoints;
  long long total = 0;
  std::map<std::string, long long> with_label;
  std::map<std::string, long long> with_page;
  std::string results_checksum;

  /// Throws ValidationError if any language violates funnel monotonicity.
  void check_funnel() const;
};

void to_json(nlohmann::json& j, const IngestManifest& m);
void from_json(const nlohmann::json& j, IngestManifest& m);

}  // namespace tierfact::wikidata
