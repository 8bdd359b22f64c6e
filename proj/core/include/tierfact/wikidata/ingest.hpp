#pragma once

#include <string>
#include <vector>

#include "tierfact/wikidata/entity_api.hpp"

namespace tierfact::wikidata {

struct IngestOptions {
  std::string snapshot;  // label recorded in the manifest
  int workers = 4;       // bounded parallelism for enrichment calls
};

struct IngestResult {
  std::vector<EntityRecord> records;  // sorted by numeric QID
  IngestManifest manifest;
};

/// Full class extraction: paged SPARQL for the member list, then per-entity
/// enrichment with bounded parallelism. Deterministic given identical
/// endpoint responses.
IngestResult ingest_class(const ClassSpec& spec, const SparqlClient& sparql,
                          const WikidataApi& api, const RegionTable& regions,
                          const IngestOptions& options);

}  // namespace tierfact::wikidata
