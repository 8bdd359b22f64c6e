#include "tierfact/common.hpp"

#include <cctype>

#include <fmt/format.h>

#include "tierfact/errors.hpp"

namespace tierfact {

const char* to_string(Region region) {
  switch (region) {
    case Region::Africa:
      return "Africa";
    case Region::Americas:
      return "Americas";
    case Region::AAO:
      return "AAO";
    case Region::Europe:
      return "Europe";
    case Region::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Region region_from_string(std::string_view name) {
  for (Region r : kRegionOrder) {
    if (name == to_string(r)) return r;
  }
  throw ValidationError(fmt::format("unknown region name: '{}'", name));
}

const char* to_string(Tier tier) {
  switch (tier) {
    case Tier::Head:
      return "Head";
    case Tier::Torso:
      return "Torso";
    case Tier::Tail:
      return "Tail";
  }
  return "Tail";
}

Tier tier_from_string(std::string_view name) {
  for (Tier t : kTierOrder) {
    if (name == to_string(t)) return t;
  }
  throw ValidationError(fmt::format("unknown tier name: '{}'", name));
}

static bool matches_id(std::string_view s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return false;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool is_valid_qid(std::string_view s) { return matches_id(s, 'Q'); }

bool qid_less(const std::string& a, const std::string& b) {
  if (is_valid_qid(a) && is_valid_qid(b)) {
    return std::stoull(a.substr(1)) < std::stoull(b.substr(1));
  }
  return a < b;
}

bool is_valid_pid(std::string_view s) { return matches_id(s, 'P'); }

void require_valid_qid(std::string_view qid, std::string_view context) {
  if (!is_valid_qid(qid)) {
    throw ValidationError(
        fmt::format("{}: '{}' is not a valid QID (expected Q[0-9]+)", context,
                    qid));
  }
}

}  // namespace tierfact
