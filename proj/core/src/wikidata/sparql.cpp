#include "tierfact/wikidata/sparql.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "tierfact/errors.hpp"
#include "tierfact/util/strings.hpp"

using nlohmann::json;

namespace tierfact::wikidata {

std::string build_query(const ClassSpec& spec) {
  spec.validate();
  std::string query;
  if (!spec.sparql_template.empty()) {
    query = util::replace_all(spec.sparql_template, "$CLASS", spec.class_qid);
  } else {
    std::string select = "SELECT ?x";
    std::string patterns =
        fmt::format("  ?x wdt:P31 wd:{} .\n", spec.class_qid);
    for (const auto& lang : spec.languages) {
      select += fmt::format(" ?label_{0} ?title_{0}", lang);
      patterns += fmt::format(
          "  OPTIONAL {{ ?x rdfs:label ?label_{0} . "
          "FILTER(LANG(?label_{0}) = \"{0}\") }}\n",
          lang);
      patterns += fmt::format(
          "  OPTIONAL {{ ?article_{0} schema:about ?x ; "
          "schema:isPartOf <https://{0}.wikipedia.org/> ; "
          "schema:name ?title_{0} . }}\n",
          lang);
    }
    query = fmt::format("{}\nWHERE {{\n{}}}\nORDER BY ?x", select, patterns);
  }
  if (query.find("$LIMIT") == std::string::npos) {
    query += "\nLIMIT $LIMIT OFFSET $OFFSET";
  }
  return query;
}

std::string qid_from_iri(const std::string& iri) {
  const size_t slash = iri.rfind('/');
  return slash == std::string::npos ? iri : iri.substr(slash + 1);
}

SparqlClient::SparqlClient(http::CachingHttpClient& client,
                           std::string endpoint_url, int page_size)
    : client_(client), endpoint_(std::move(endpoint_url)),
      page_size_(page_size) {}

std::vector<SparqlRow> SparqlClient::execute(const std::string& query) const {
  http::HttpRequest request;
  request.method = "POST";
  request.url = endpoint_;
  request.body = query;
  request.content_type = "application/sparql-query";
  request.headers["Accept"] = "application/sparql-results+json";
  http::HttpResponse response;
  try {
    response = client_.fetch(request);
  } catch (const TransportError& e) {
    // The public endpoint kills long-running queries; a smaller page keeps
    // each request under the limit.
    throw TransportError(
        fmt::format("{} (if the endpoint timed out, retry with a smaller "
                    "page_size)",
                    e.what()),
        e.attempts());
  }
  if (response.status != 200) {
    throw EndpointError(fmt::format("SPARQL endpoint returned HTTP {}: {}",
                                    response.status,
                                    response.body.substr(0, 200)));
  }
  json payload = json::parse(response.body, nullptr, false);
  if (payload.is_discarded() || !payload.contains("results")) {
    throw ProtocolError("SPARQL response is not a results document");
  }
  std::vector<SparqlRow> rows;
  for (const auto& binding : payload["results"]["bindings"]) {
    SparqlRow row;
    for (auto it = binding.begin(); it != binding.end(); ++it) {
      row.vars[it.key()] = it.value().value("value", "");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SparqlRow> SparqlClient::run_paged(const std::string& query) const {
  std::vector<SparqlRow> all;
  long long offset = 0;
  while (true) {
    std::string page_query =
        util::replace_all(query, "$LIMIT", std::to_string(page_size_));
    page_query =
        util::replace_all(page_query, "$OFFSET", std::to_string(offset));
    std::vector<SparqlRow> page = execute(page_query);
    const bool last = static_cast<int>(page.size()) < page_size_;
    for (auto& row : page) all.push_back(std::move(row));
    if (last) break;
    offset += page_size_;
  }
  return all;
}

std::vector<SparqlRow> SparqlClient::run_once(const std::string& query) const {
  return execute(query);
}

long long SparqlClient::run_count(const std::string& query) const {
  const auto rows = execute(query);
  if (rows.empty()) return 0;
  const auto& vars = rows.front().vars;
  if (vars.empty()) return 0;
  return std::stoll(vars.begin()->second);
}

}  // namespace tierfact::wikidata
