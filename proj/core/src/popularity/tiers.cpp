#include "tierfact/popularity/tiers.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "tierfact/errors.hpp"

namespace tierfact::popularity {

TierAssignment partition_tiers(
    std::vector<std::pair<std::string, double>> entities,
    const std::string& metric_name) {
  if (entities.empty()) {
    throw ValidationError("partition_tiers: empty entity list");
  }
  long double total = 0.0L;
  for (const auto& [qid, value] : entities) {
    if (value < 0) {
      throw ValidationError(fmt::format(
          "partition_tiers: negative metric value {} for {}", value, qid));
    }
    total += static_cast<long double>(value);
  }
  if (total <= 0.0L) {
    throw ValidationError(
        "partition_tiers: all metric values are zero, no meaningful "
        "partition exists");
  }

  std::sort(entities.begin(), entities.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return qid_less(a.first, b.first);
            });

  // Shortest prefix with cumulative share >= 1/3, then >= 2/3. Compared as
  // 3*cum >= k*total, which is exact for integral metrics.
  TierAssignment assignment;
  assignment.metric = metric_name;
  assignment.boundaries.total = static_cast<double>(total);
  size_t head_end = 0;
  size_t torso_end = 0;
  long double cumulative = 0.0L;
  bool head_done = false;
  for (size_t i = 0; i < entities.size(); ++i) {
    cumulative += static_cast<long double>(entities[i].second);
    if (!head_done && 3.0L * cumulative >= total) {
      head_end = i + 1;
      assignment.boundaries.head_share =
          static_cast<double>(cumulative / total);
      head_done = true;
    }
    if (head_done && 3.0L * cumulative >= 2.0L * total) {
      torso_end = i + 1;
      assignment.boundaries.torso_share =
          static_cast<double>(cumulative / total);
      break;
    }
  }
  if (torso_end < head_end) torso_end = head_end;

  assignment.boundaries.head_size = head_end;
  assignment.boundaries.torso_size = torso_end - head_end;
  assignment.ranking = std::move(entities);
  for (size_t i = 0; i < assignment.ranking.size(); ++i) {
    Tier tier = Tier::Tail;
    if (i < head_end) {
      tier = Tier::Head;
    } else if (i < torso_end) {
      tier = Tier::Torso;
    }
    assignment.tiers[assignment.ranking[i].first] = tier;
  }
  return assignment;
}

}  // namespace tierfact::popularity
