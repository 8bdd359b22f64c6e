#include "tierfact/wikistats/client.hpp"

#include <set>

#include <fmt/format.h>

#include "tierfact/errors.hpp"
#include "tierfact/util/strings.hpp"

using nlohmann::json;

namespace tierfact::wikistats {

void to_json(json& j, const LanguageSignals& s) {
  j = json{{"title", s.title},         {"pageviews", s.pageviews},
           {"inlinks", s.inlinks},     {"edits", s.edits},
           {"page_length", s.page_length}, {"is_stub", s.is_stub}};
}

void from_json(const json& j, LanguageSignals& s) {
  s.title = j.value("title", "");
  s.pageviews = j.value("pageviews", 0LL);
  s.inlinks = j.value("inlinks", 0LL);
  s.edits = j.value("edits", 0LL);
  s.page_length = j.value("page_length", 0LL);
  s.is_stub = j.value("is_stub", false);
}

void to_json(json& j, const PopularityProfile& p) {
  j = json{{"qid", p.qid},
           {"per_language", p.per_language},
           {"triple_count", p.triple_count},
           {"window_start", p.window_start},
           {"window_end", p.window_end}};
}

void from_json(const json& j, PopularityProfile& p) {
  j.at("qid").get_to(p.qid);
  p.per_language =
      j.value("per_language", std::map<std::string, LanguageSignals>{});
  p.triple_count = j.value("triple_count", 0LL);
  p.window_start = j.value("window_start", "");
  p.window_end = j.value("window_end", "");
}

std::vector<std::string> MonthWindow::month_keys() const {
  const auto parse = [](const std::string& s) -> std::pair<int, int> {
    if (s.size() != 6) {
      throw ValidationError(fmt::format("bad month '{}', expected YYYYMM", s));
    }
    return {std::stoi(s.substr(0, 4)), std::stoi(s.substr(4, 2))};
  };
  auto [sy, sm] = parse(start);
  auto [ey, em] = parse(end);
  if (sm < 1 || sm > 12 || em < 1 || em > 12) {
    throw ValidationError(fmt::format("bad month window {}..{}", start, end));
  }
  std::vector<std::string> keys;
  int y = sy;
  int m = sm;
  while (y < ey || (y == ey && m <= em)) {
    keys.push_back(fmt::format("{:04d}{:02d}", y, m));
    if (++m > 12) {
      m = 1;
      ++y;
    }
  }
  if (keys.empty()) {
    throw ValidationError(
        fmt::format("month window {}..{} covers no months", start, end));
  }
  return keys;
}

WikiStatsClient::WikiStatsClient(http::CachingHttpClient& client,
                                 std::string pageviews_base,
                                 std::string action_api_template)
    : client_(client),
      pageviews_base_(std::move(pageviews_base)),
      action_api_template_(std::move(action_api_template)) {}

std::string WikiStatsClient::action_api(const std::string& lang) const {
  return util::replace_all(action_api_template_, "{lang}", lang);
}

json WikiStatsClient::action_query(const std::string& lang,
                                   const std::string& params) const {
  http::HttpRequest request;
  request.url =
      fmt::format("{}?action=query&format=json&{}", action_api(lang), params);
  const auto response = client_.fetch(request);
  if (response.status != 200) {
    throw EndpointError(fmt::format("action API returned HTTP {} for {}",
                                    response.status, request.url));
  }
  json payload = json::parse(response.body, nullptr, false);
  if (payload.is_discarded()) {
    throw ProtocolError(fmt::format("action API returned non-JSON for {}",
                                    request.url));
  }
  return payload;
}

static std::string title_for_url(const std::string& title) {
  return util::url_encode(util::replace_all(title, " ", "_"));
}

long long WikiStatsClient::fetch_pageviews(const std::string& title,
                                           const std::string& lang,
                                           const MonthWindow& window) const {
  const auto months = window.month_keys();
  http::HttpRequest request;
  request.url = fmt::format(
      "{}/per-article/{}.wikipedia/all-access/user/{}/monthly/{}0100/{}0100",
      pageviews_base_, lang, title_for_url(title), months.front(),
      months.back());
  const auto response = client_.fetch(request);
  if (response.status == 404) {
    throw NotFoundError(
        fmt::format("no pageview data for '{}' ({})", title, lang));
  }
  if (response.status != 200) {
    throw EndpointError(fmt::format("pageviews API returned HTTP {}",
                                    response.status));
  }
  json payload = json::parse(response.body, nullptr, false);
  if (payload.is_discarded() || !payload.contains("items")) {
    throw ProtocolError("pageviews API response missing items");
  }
  std::map<std::string, long long> by_month;
  for (const auto& item : payload["items"]) {
    const std::string ts = item.value("timestamp", "");
    if (ts.size() < 6) continue;
    by_month[ts.substr(0, 6)] += item.value("views", 0LL);
  }
  long long total = 0;
  for (const auto& month : months) {
    auto it = by_month.find(month);
    if (it == by_month.end()) {
      throw ValidationError(fmt::format(
          "pageview window {}..{} not fully covered for '{}': month {} "
          "missing",
          window.start, window.end, title, month));
    }
    total += it->second;
  }
  return total;
}

long long WikiStatsClient::fetch_inlinks(const std::string& title,
                                         const std::string& lang) const {
  long long count = 0;
  std::string continue_param;
  while (true) {
    std::string params = fmt::format("list=backlinks&bltitle={}&bllimit=500",
                                     util::url_encode(title));
    if (!continue_param.empty()) {
      params += fmt::format("&blcontinue={}", util::url_encode(continue_param));
    }
    const json payload = action_query(lang, params);
    const json& backlinks =
        payload.value("query", json::object()).value("backlinks", json::array());
    count += static_cast<long long>(backlinks.size());
    if (payload.contains("continue") &&
        payload["continue"].contains("blcontinue")) {
      continue_param = payload["continue"]["blcontinue"].get<std::string>();
    } else {
      break;
    }
  }
  return count;
}

long long WikiStatsClient::fetch_edits(const std::string& title,
                                       const std::string& lang) const {
  long long count = 0;
  std::string continue_param;
  while (true) {
    std::string params = fmt::format(
        "prop=revisions&titles={}&rvprop=ids&rvlimit=500",
        util::url_encode(title));
    if (!continue_param.empty()) {
      params += fmt::format("&rvcontinue={}", util::url_encode(continue_param));
    }
    const json payload = action_query(lang, params);
    const json& pages =
        payload.value("query", json::object()).value("pages", json::object());
    for (const auto& [page_id, page] : pages.items()) {
      if (page_id == "-1" || page.contains("missing")) {
        throw NotFoundError(
            fmt::format("page '{}' not found on {}wiki", title, lang));
      }
      count += static_cast<long long>(
          page.value("revisions", json::array()).size());
    }
    if (payload.contains("continue") &&
        payload["continue"].contains("rvcontinue")) {
      continue_param = payload["continue"]["rvcontinue"].get<std::string>();
    } else {
      break;
    }
  }
  return count;
}

long long WikiStatsClient::fetch_page_length(const std::string& title,
                                             const std::string& lang) const {
  const json payload = action_query(
      lang, fmt::format("prop=info&titles={}", util::url_encode(title)));
  const json& pages =
      payload.value("query", json::object()).value("pages", json::object());
  for (const auto& [page_id, page] : pages.items()) {
    if (page_id == "-1" || page.contains("missing")) {
      throw NotFoundError(
          fmt::format("page '{}' not found on {}wiki", title, lang));
    }
    return page.value("length", 0LL);
  }
  throw ProtocolError("prop=info response contained no pages");
}

bool WikiStatsClient::detect_stub(const std::string& title,
                                  const std::string& lang) const {
  const json payload = action_query(
      lang, fmt::format(
                "prop=templates%7Ccategories&titles={}&tllimit=500&cllimit=500",
                util::url_encode(title)));
  const json& pages =
      payload.value("query", json::object()).value("pages", json::object());
  for (const auto& [page_id, page] : pages.items()) {
    if (page_id == "-1" || page.contains("missing")) {
      throw NotFoundError(
          fmt::format("page '{}' not found on {}wiki", title, lang));
    }
    for (const auto& tmpl : page.value("templates", json::array())) {
      const std::string name =
          util::to_lower_ascii(tmpl.value("title", ""));
      if (name.size() >= 5 && name.ends_with("-stub")) return true;
    }
    for (const auto& cat : page.value("categories", json::array())) {
      const std::string name = util::to_lower_ascii(cat.value("title", ""));
      if (name.find("stub") != std::string::npos) return true;
    }
  }
  return false;
}

LanguageSignals WikiStatsClient::collect(const std::string& title,
                                         const std::string& lang,
                                         const MonthWindow& window) const {
  LanguageSignals signals;
  signals.title = title;
  signals.pageviews = fetch_pageviews(title, lang, window);
  signals.inlinks = fetch_inlinks(title, lang);
  signals.edits = fetch_edits(title, lang);
  signals.page_length = fetch_page_length(title, lang);
  signals.is_stub = detect_stub(title, lang);
  return signals;
}

PopularityProfile WikiStatsClient::profile_for(
    const wikidata::EntityRecord& record, const MonthWindow& window) const {
  PopularityProfile profile;
  profile.qid = record.qid;
  profile.triple_count = record.triple_count;
  profile.window_start = window.start;
  profile.window_end = window.end;
  for (const auto& [lang, title] : record.wiki_titles) {
    profile.per_language[lang] = collect(title, lang, window);
  }
  return profile;
}

}  // namespace tierfact::wikistats
