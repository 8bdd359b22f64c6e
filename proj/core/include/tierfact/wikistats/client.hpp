#pragma once

#include <string>

#include "tierfact/http/client.hpp"
#include "tierfact/wikidata/entity_record.hpp"
#include "tierfact/wikistats/profile.hpp"

namespace tierfact::wikistats {

/// Wikipedia popularity signals: pageviews from the Wikimedia REST pageviews
/// API, everything else from the MediaWiki action API. All calls are paged
/// to completion and cache-backed.
class WikiStatsClient {
 public:
  /// `action_api_template` contains "{lang}", e.g.
  /// "https://{lang}.wikipedia.org/w/api.php".
  WikiStatsClient(http::CachingHttpClient& client, std::string pageviews_base,
                  std::string action_api_template);

  /// Sum of per-month user pageviews. Every month of the window must be
  /// covered; a missing month is an error, a zero month contributes zero.
  long long fetch_pageviews(const std::string& title, const std::string& lang,
                            const MonthWindow& window) const;

  long long fetch_inlinks(const std::string& title,
                          const std::string& lang) const;
  long long fetch_edits(const std::string& title,
                        const std::string& lang) const;
  long long fetch_page_length(const std::string& title,
                              const std::string& lang) const;

  /// True iff a transcluded template name ends in "-stub" or a category name
  /// contains "stub" (both case-insensitive).
  bool detect_stub(const std::string& title, const std::string& lang) const;

  LanguageSignals collect(const std::string& title, const std::string& lang,
                          const MonthWindow& window) const;

  /// Signals for every language the record has a page in.
  PopularityProfile profile_for(const wikidata::EntityRecord& record,
                                const MonthWindow& window) const;

 private:
  std::string action_api(const std::string& lang) const;
  nlohmann::json action_query(const std::string& lang,
                              const std::string& params) const;

  http::CachingHttpClient& client_;
  std::string pageviews_base_;
  std::string action_api_template_;
};

}  // namespace tierfact::wikistats
