#include "tierfact/wikidata/entity_api.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "tierfact/errors.hpp"
#include "tierfact/util/strings.hpp"

using nlohmann::json;

namespace tierfact::wikidata {

UnitTable UnitTable::defaults() {
  UnitTable table;
  table.set("Q828224", 1.0);       // kilometre
  table.set("Q11573", 0.001);      // metre
  table.set("Q253276", 1.609344);  // mile
  return table;
}

UnitTable UnitTable::from_json(const json& j) {
  UnitTable table = defaults();
  for (auto it = j.begin(); it != j.end(); ++it) {
    table.set(it.key(), it.value().get<double>());
  }
  return table;
}

void UnitTable::set(const std::string& unit_qid, double factor_to_km) {
  factors_[unit_qid] = factor_to_km;
}

std::optional<double> UnitTable::factor_to_km(
    const std::string& unit_qid) const {
  auto it = factors_.find(unit_qid);
  if (it == factors_.end()) return std::nullopt;
  return it->second;
}

WikidataApi::WikidataApi(http::CachingHttpClient& client, std::string api_url,
                         UnitTable units)
    : client_(client), api_url_(std::move(api_url)), units_(std::move(units)) {}

json WikidataApi::get_entity(const std::string& qid) const {
  require_valid_qid(qid, "get_entity");
  http::HttpRequest request;
  request.url = fmt::format(
      "{}?action=wbgetentities&ids={}&format=json", api_url_, qid);
  const auto response = client_.fetch(request);
  if (response.status != 200) {
    throw EndpointError(fmt::format("wbgetentities {} returned HTTP {}", qid,
                                    response.status));
  }
  json payload = json::parse(response.body, nullptr, false);
  if (payload.is_discarded()) {
    throw ProtocolError("wbgetentities response is not JSON");
  }
  if (!payload.contains("entities") || !payload["entities"].contains(qid)) {
    throw NotFoundError(fmt::format("entity {} not found", qid));
  }
  const json& entity = payload["entities"][qid];
  if (entity.contains("missing")) {
    throw NotFoundError(fmt::format("entity {} not found", qid));
  }
  return entity;
}

namespace {

// Item QIDs referenced by a claim's mainsnak (for location hops).
std::vector<std::string> claim_item_values(const json& entity,
                                           const std::string& prop) {
  std::vector<std::string> values;
  if (!entity.contains("claims") || !entity["claims"].contains(prop)) {
    return values;
  }
  for (const auto& claim : entity["claims"][prop]) {
    const json& snak = claim.value("mainsnak", json::object());
    const json& datavalue = snak.value("datavalue", json::object());
    const json& value = datavalue.value("value", json::object());
    if (value.is_object() && value.contains("id")) {
      values.push_back(value["id"].get<std::string>());
    }
  }
  return values;
}

std::string unit_qid_from_iri(const std::string& unit_iri) {
  if (unit_iri == "1" || unit_iri.empty()) return "1";
  return qid_from_iri(unit_iri);
}

}  // namespace

EntityRecord WikidataApi::enrich(const std::string& qid, const ClassSpec& spec,
                                 const RegionTable& regions,
                                 const SparqlClient& sparql) const {
  const json entity = get_entity(qid);
  EntityRecord record;
  record.qid = qid;

  for (const auto& lang : spec.languages) {
    if (entity.contains("labels") && entity["labels"].contains(lang)) {
      record.labels[lang] = entity["labels"][lang].value("value", "");
    }
    const std::string sitelink = lang + "wiki";
    if (entity.contains("sitelinks") &&
        entity["sitelinks"].contains(sitelink)) {
      const std::string title =
          entity["sitelinks"][sitelink].value("title", "");
      if (!title.empty()) record.wiki_titles[lang] = title;
    }
  }

  // Location paths: "P17" reads the entity itself, "P176/P17" hops through
  // the first-listed property (e.g. manufacturer) and reads the target.
  for (const auto& path : spec.location_props) {
    const auto hops = util::split(path, '/');
    if (hops.size() == 1) {
      for (auto& value : claim_item_values(entity, hops[0])) {
        record.location_qids.push_back(std::move(value));
      }
    } else if (hops.size() == 2) {
      for (const auto& intermediate : claim_item_values(entity, hops[0])) {
        try {
          const json hop_entity = get_entity(intermediate);
          for (auto& value : claim_item_values(hop_entity, hops[1])) {
            record.location_qids.push_back(std::move(value));
          }
        } catch (const NotFoundError&) {
          spdlog::warn("{}: location hop {} -> {} missing", qid, hops[0],
                       intermediate);
        }
      }
    } else {
      throw ValidationError(fmt::format(
          "location path '{}' has more than two hops", path));
    }
  }

  for (const auto& prop : spec.attribute_props) {
    if (!entity.contains("claims") || !entity["claims"].contains(prop)) {
      continue;
    }
    const json& claims = entity["claims"][prop];
    if (claims.empty()) continue;
    const json& snak = claims[0].value("mainsnak", json::object());
    const json& datavalue = snak.value("datavalue", json::object());
    if (!datavalue.is_object() || !datavalue.contains("value")) {
      spdlog::warn("{}: claim {} has no usable value", qid, prop);
      continue;
    }
    const json& value = datavalue["value"];
    AttributeValue attr;
    if (value.is_object() && value.contains("amount")) {
      attr.raw = value["amount"].get<std::string>();
      attr.amount = std::stod(attr.raw);
      attr.unit_qid = unit_qid_from_iri(value.value("unit", "1"));
      if (auto factor = units_.factor_to_km(attr.unit_qid)) {
        attr.normalized_km = attr.amount * *factor;
      }
    } else if (value.is_object() && value.contains("id")) {
      attr.raw = value["id"].get<std::string>();
    } else if (value.is_string()) {
      attr.raw = value.get<std::string>();
    } else {
      attr.raw = value.dump();
    }
    record.attributes[prop] = std::move(attr);
  }

  record.region = regions.resolve(record.location_qids);
  record.triple_count = count_triples(qid, sparql);
  return record;
}

long long WikidataApi::count_triples(const std::string& qid,
                                     const SparqlClient& sparql) const {
  const json entity = get_entity(qid);
  long long outgoing = 0;
  if (entity.contains("claims")) {
    for (const auto& [prop, claims] : entity["claims"].items()) {
      (void)prop;
      outgoing += static_cast<long long>(claims.size());
    }
  }
  const long long incoming = sparql.run_count(fmt::format(
      "SELECT (COUNT(*) AS ?c) WHERE {{ ?s ?p wd:{} . }}", qid));
  return outgoing + incoming;
}

}  // namespace tierfact::wikidata
