#include "tierfact/wikidata/ingest.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "tierfact/util/parallel.hpp"
#include "tierfact/util/sha256.hpp"

using nlohmann::json;

namespace tierfact::wikidata {

IngestResult ingest_class(const ClassSpec& spec, const SparqlClient& sparql,
                          const WikidataApi& api, const RegionTable& regions,
                          const IngestOptions& options) {
  const std::string query = build_query(spec);
  const std::vector<SparqlRow> rows = sparql.run_paged(query);

  // Checksum over the raw row stream, before dedup, so identical endpoint
  // responses always yield the identical manifest.
  json raw = json::array();
  for (const auto& row : rows) raw.push_back(row.vars);
  const std::string checksum = util::sha256_hex(raw.dump());

  std::set<std::string, bool (*)(const std::string&, const std::string&)>
      qids(qid_less);
  for (const auto& row : rows) {
    if (!row.has("x")) continue;
    qids.insert(qid_from_iri(row.get("x")));
  }

  std::vector<std::string> ordered(qids.begin(), qids.end());
  std::vector<EntityRecord> records(ordered.size());
  util::parallel_for(ordered.size(), options.workers, [&](size_t i) {
    records[i] = api.enrich(ordered[i], spec, regions, sparql);
  });

  IngestResult result;
  result.records = std::move(records);
  result.manifest.class_name = spec.name;
  result.manifest.snapshot = options.snapshot;
  result.manifest.endpoints = {sparql.endpoint(), api.api_url()};
  result.manifest.total = static_cast<long long>(result.records.size());
  result.manifest.results_checksum = checksum;
  for (const auto& lang : spec.languages) {
    long long labelled = 0;
    long long paged = 0;
    for (const auto& record : result.records) {
      const bool has_label = record.labels.count(lang) > 0;
      if (has_label) ++labelled;
      // Funnel semantics: the page count refines the label count.
      if (has_label && record.has_page(lang)) ++paged;
    }
    result.manifest.with_label[lang] = labelled;
    result.manifest.with_page[lang] = paged;
  }
  result.manifest.check_funnel();
  spdlog::info("ingested class '{}': {} entities", spec.name,
               result.records.size());
  return result;
}

}  // namespace tierfact::wikidata
