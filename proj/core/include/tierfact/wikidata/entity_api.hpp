#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "tierfact/http/client.hpp"
#include "tierfact/wikidata/class_spec.hpp"
#include "tierfact/wikidata/entity_record.hpp"
#include "tierfact/wikidata/region.hpp"
#include "tierfact/wikidata/sparql.hpp"

namespace tierfact::wikidata {

/// Conversion factors to kilometres for common length units. Keys are unit
/// QIDs; extendable via config.
class UnitTable {
 public:
  static UnitTable defaults();
  static UnitTable from_json(const nlohmann::json& j);

  void set(const std::string& unit_qid, double factor_to_km);
  std::optional<double> factor_to_km(const std::string& unit_qid) const;

 private:
  std::map<std::string, double> factors_;
};

/// wbgetentities-style client plus the per-entity enrichment walk.
class WikidataApi {
 public:
  WikidataApi(http::CachingHttpClient& client, std::string api_url,
              UnitTable units = UnitTable::defaults());

  /// Raw entity JSON; NotFoundError when the API reports the entity missing.
  nlohmann::json get_entity(const std::string& qid) const;

  /// Fills labels, sitelink titles, location QIDs (walking location property
  /// paths, one hop allowed), attributes, region, and triple count. Absent
  /// data stays absent; each gap logs one warning.
  EntityRecord enrich(const std::string& qid, const ClassSpec& spec,
                      const RegionTable& regions,
                      const SparqlClient& sparql) const;

  /// Statements with the entity as subject plus statements referencing it as
  /// object/value (the latter via a SPARQL count).
  long long count_triples(const std::string& qid,
                          const SparqlClient& sparql) const;

  const std::string& api_url() const { return api_url_; }

 private:
  http::CachingHttpClient& client_;
  std::string api_url_;
  UnitTable units_;
};

}  // namespace tierfact::wikidata
