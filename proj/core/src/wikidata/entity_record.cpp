#include "tierfact/wikidata/entity_record.hpp"

#include <fmt/format.h>

#include "tierfact/errors.hpp"

namespace tierfact::wikidata {

void to_json(nlohmann::json& j, const AttributeValue& v) {
  j = nlohmann::json{
      {"raw", v.raw}, {"amount", v.amount}, {"unit_qid", v.unit_qid}};
  if (v.normalized_km) j["normalized_km"] = *v.normalized_km;
}

void from_json(const nlohmann::json& j, AttributeValue& v) {
  v.raw = j.value("raw", "");
  v.amount = j.value("amount", 0.0);
  v.unit_qid = j.value("unit_qid", "1");
  if (j.contains("normalized_km")) {
    v.normalized_km = j["normalized_km"].get<double>();
  } else {
    v.normalized_km.reset();
  }
}

void to_json(nlohmann::json& j, const EntityRecord& r) {
  j = nlohmann::json{{"qid", r.qid},
                     {"labels", r.labels},
                     {"wiki_titles", r.wiki_titles},
                     {"location_qids", r.location_qids},
                     {"region", to_string(r.region)},
                     {"attributes", r.attributes},
                     {"triple_count", r.triple_count}};
}

void from_json(const nlohmann::json& j, EntityRecord& r) {
  j.at("qid").get_to(r.qid);
  r.labels = j.value("labels", std::map<std::string, std::string>{});
  r.wiki_titles = j.value("wiki_titles", std::map<std::string, std::string>{});
  r.location_qids = j.value("location_qids", std::vector<std::string>{});
  r.region = region_from_string(j.value("region", "Unknown"));
  r.attributes =
      j.value("attributes", std::map<std::string, AttributeValue>{});
  r.triple_count = j.value("triple_count", 0LL);
}

void IngestManifest::check_funnel() const {
  for (const auto& [lang, labelled] : with_label) {
    if (labelled > total) {
      throw ValidationError(fmt::format(
          "manifest funnel violated for '{}': with_label[{}]={} > total={}",
          class_name, lang, labelled, total));
    }
    auto it = with_page.find(lang);
    if (it != with_page.end() && it->second > labelled) {
      throw ValidationError(fmt::format(
          "manifest funnel violated for '{}': with_page[{}]={} > "
          "with_label[{}]={}",
          class_name, lang, it->second, lang, labelled));
    }
  }
}

void to_json(nlohmann::json& j, const IngestManifest& m) {
  j = nlohmann::json{{"class_name", m.class_name},
                     {"snapshot", m.snapshot},
                     {"endpoints", m.endpoints},
                     {"total", m.total},
                     {"with_label", m.with_label},
                     {"with_page", m.with_page},
                     {"results_checksum", m.results_checksum}};
}

void from_json(const nlohmann::json& j, IngestManifest& m) {
  j.at("class_name").get_to(m.class_name);
  m.snapshot = j.value("snapshot", "");
  m.endpoints = j.value("endpoints", std::vector<std::string>{});
  m.total = j.value("total", 0LL);
  m.with_label = j.value("with_label", std::map<std::string, long long>{});
  m.with_page = j.value("with_page", std::map<std::string, long long>{});
  m.results_checksum = j.value("results_checksum", "");
}

}  // namespace tierfact::wikidata
