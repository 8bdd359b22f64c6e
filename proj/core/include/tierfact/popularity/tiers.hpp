#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tierfact/common.hpp"

namespace tierfact::popularity {

struct TierBoundaries {
  size_t head_size = 0;
  size_t torso_size = 0;  // number of Torso entities, not the prefix length
  double head_share = 0.0;
  double torso_share = 0.0;  // cumulative share at the Head+Torso boundary
  double total = 0.0;
};

struct TierAssignment {
  std::string metric;
  /// Descending by metric value, ties broken by ascending QID.
  std::vector<std::pair<std::string, double>> ranking;
  std::map<std::string, Tier> tiers;
  TierBoundaries boundaries;

  Tier tier_of(const std::string& qid) const { return tiers.at(qid); }
  size_t tail_size() const {
    return ranking.size() - boundaries.head_size - boundaries.torso_size;
  }
};

/// Partitions a class by cumulative popularity share: Head is the shortest
/// descending-order prefix holding at least one third of the total metric
/// mass, Head+Torso the shortest prefix holding at least two thirds, Tail is
/// the rest. Ties in the metric are broken by ascending QID so the partition
/// is a pure function of the input set.
///
/// Throws ValidationError on negative values or when every value is zero.
TierAssignment partition_tiers(
    std::vector<std::pair<std::string, double>> entities,
    const std::string& metric_name);

}  // namespace tierfact::popularity
