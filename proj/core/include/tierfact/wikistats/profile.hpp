#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tierfact::wikistats {

/// Popularity signals for one entity in one language. A profile only has an
/// entry for a language when the page exists there — absence, not zero.
struct LanguageSignals {
  std::string title;
  long long pageviews = 0;
  long long inlinks = 0;
  long long edits = 0;
  long long page_length = 0;
  bool is_stub = false;
};

struct PopularityProfile {
  std::string qid;
  std::map<std::string, LanguageSignals> per_language;
  long long triple_count = 0;
  std::string window_start;  // YYYYMM, inclusive
  std::string window_end;    // YYYYMM, inclusive

  bool has_language(const std::string& lang) const {
    return per_language.count(lang) > 0;
  }
};

void to_json(nlohmann::json& j, const LanguageSignals& s);
void from_json(const nlohmann::json& j, LanguageSignals& s);
void to_json(nlohmann::json& j, const PopularityProfile& p);
void from_json(const nlohmann::json& j, PopularityProfile& p);

/// Inclusive month range, both ends "YYYYMM".
struct MonthWindow {
  std::string start;
  std::string end;

  /// Every month key in order; throws ValidationError when the window is
  /// empty or malformed.
  std::vector<std::string> month_keys() const;
};

}  // namespace tierfact::wikistats
