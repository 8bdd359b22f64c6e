#pragma once

#include <array>
#include <string>
#include <string_view>

namespace tierfact {

/// Geographic region an entity is attributed to. Unknown covers entities
/// whose locations resolve to nothing in the region table (e.g. hurricanes
/// forming over open ocean).
enum class Region { Africa, Americas, AAO, Europe, Unknown };

/// Fixed iteration order used for round-robin sampling and report rows.
inline constexpr std::array<Region, 5> kRegionOrder = {
    Region::Africa, Region::Americas, Region::AAO, Region::Europe,
    Region::Unknown};

const char* to_string(Region region);
Region region_from_string(std::string_view name);

/// Popularity tier within a class. Each tier accounts for roughly one third
/// of the class's cumulative popularity mass.
enum class Tier { Head, Torso, Tail };

inline constexpr std::array<Tier, 3> kTierOrder = {Tier::Head, Tier::Torso,
                                                   Tier::Tail};

const char* to_string(Tier tier);
Tier tier_from_string(std::string_view name);

/// True iff `s` matches `Q[0-9]+`.
bool is_valid_qid(std::string_view s);

/// Orders identifiers by numeric part when both are well-formed QIDs
/// (Q42 < Q123), lexicographically otherwise. Total order either way.
bool qid_less(const std::string& a, const std::string& b);

/// True iff `s` matches `P[0-9]+`.
bool is_valid_pid(std::string_view s);

/// Throws ValidationError unless `qid` is well-formed.
void require_valid_qid(std::string_view qid, std::string_view context);

}  // namespace tierfact
