#include "tierfact/wikidata/class_spec.hpp"

#include <fmt/format.h>

#include "tierfact/common.hpp"
#include "tierfact/errors.hpp"
#include "tierfact/util/strings.hpp"

namespace tierfact::wikidata {

void ClassSpec::validate() const {
  require_valid_qid(class_qid, fmt::format("class spec '{}'", name));
  if (name.empty()) {
    throw ValidationError("class spec needs a non-empty name");
  }
  if (languages.empty()) {
    throw ValidationError(
        fmt::format("class spec '{}': languages must be non-empty", name));
  }
  for (const auto& prop : attribute_props) {
    if (!is_valid_pid(prop)) {
      throw ValidationError(fmt::format(
          "class spec '{}': bad attribute property '{}'", name, prop));
    }
  }
  for (const auto& path : location_props) {
    for (const auto& hop : util::split(path, '/')) {
      if (!is_valid_pid(hop)) {
        throw ValidationError(fmt::format(
            "class spec '{}': bad location property path '{}'", name, path));
      }
    }
  }
}

void to_json(nlohmann::json& j, const ClassSpec& spec) {
  j = nlohmann::json{{"class_qid", spec.class_qid},
                     {"name", spec.name},
                     {"sparql_template", spec.sparql_template},
                     {"languages", spec.languages},
                     {"attribute_props", spec.attribute_props},
                     {"location_props", spec.location_props}};
}

void from_json(const nlohmann::json& j, ClassSpec& spec) {
  j.at("class_qid").get_to(spec.class_qid);
  j.at("name").get_to(spec.name);
  spec.sparql_template = j.value("sparql_template", "");
  j.at("languages").get_to(spec.languages);
  spec.attribute_props =
      j.value("attribute_props", std::vector<std::string>{});
  spec.location_props = j.value("location_props", std::vector<std::string>{});
}

}  // namespace tierfact::wikidata
