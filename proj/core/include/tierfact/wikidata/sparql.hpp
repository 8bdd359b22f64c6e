#pragma once

#include <map>
#include <string>
#include <vector>

#include "tierfact/http/client.hpp"
#include "tierfact/wikidata/class_spec.hpp"

namespace tierfact::wikidata {

/// One result row: variable name -> plain value (IRIs kept verbatim).
struct SparqlRow {
  std::map<std::string, std::string> vars;

  bool has(const std::string& name) const { return vars.count(name) > 0; }
  const std::string& get(const std::string& name) const {
    return vars.at(name);
  }
};

/// Renders the class-extraction query for `spec`. A custom template has
/// $CLASS substituted; otherwise a default query is generated that selects
/// the entity (?x), one label and one sitelink title per language, ordered
/// by entity IRI. The result always contains $LIMIT/$OFFSET placeholders for
/// paging.
std::string build_query(const ClassSpec& spec);

/// Extracts "Q123" from a Wikidata entity IRI (or returns the input if it is
/// already a bare QID).
std::string qid_from_iri(const std::string& iri);

class SparqlClient {
 public:
  SparqlClient(http::CachingHttpClient& client, std::string endpoint_url,
               int page_size = 10000);

  /// Runs a query containing $LIMIT/$OFFSET placeholders to completion,
  /// concatenating all pages.
  std::vector<SparqlRow> run_paged(const std::string& query) const;

  /// Runs a complete query once (no placeholder substitution).
  std::vector<SparqlRow> run_once(const std::string& query) const;

  /// Convenience for SELECT (COUNT(*) AS ?c) queries.
  long long run_count(const std::string& query) const;

  const std::string& endpoint() const { return endpoint_; }

 private:
  std::vector<SparqlRow> execute(const std::string& query) const;

  http::CachingHttpClient& client_;
  std::string endpoint_;
  int page_size_;
};

}  // namespace tierfact::wikidata
