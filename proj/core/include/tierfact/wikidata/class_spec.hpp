#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tierfact::wikidata {

/// Describes one target class ("rivers", "cars", ...). `location_props`
/// entries are property paths: "P17" reads the entity's own country,
/// "P176/P17" hops to the manufacturer first and reads its country.
struct ClassSpec {
  std::string class_qid;
  std::string name;
  std::string sparql_template;  // empty -> default template generated
  std::vector<std::string> languages;
  std::vector<std::string> attribute_props;
  std::vector<std::string> location_props;

  /// Throws ValidationError on malformed QID, empty languages, or bad
  /// property paths.
  void validate() const;
};

void to_json(nlohmann::json& j, const ClassSpec& spec);
void from_json(const nlohmann::json& j, ClassSpec& spec);

}  // namespace tierfact::wikidata
