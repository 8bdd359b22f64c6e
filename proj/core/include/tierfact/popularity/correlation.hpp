#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace tierfact::popularity {

enum class CorrelationMethod {
  Spearman,    // rank correlation, ties get average ranks
  PearsonLog,  // Pearson on log(1+x)
};

const char* to_string(CorrelationMethod method);

/// Pairwise coefficient over two equal-length vectors (n >= 3). Throws
/// ValidationError on size mismatch / short input and
/// UndefinedCorrelationError when either vector is constant.
double correlate(std::span<const double> a, std::span<const double> b,
                 CorrelationMethod method);

struct CorrelationReport {
  std::string method;
  std::vector<std::string> metrics;
  /// metrics.size()^2 entries; NaN marks pairs with too little overlap.
  std::vector<std::vector<double>> matrix;
};

/// Builds the full matrix over `metric -> (entity -> value)` maps, using for
/// each pair the intersection of entities carrying both metrics. Pairs with
/// fewer than 3 shared entities or a constant vector get NaN.
CorrelationReport correlation_matrix(
    const std::map<std::string, std::map<std::string, double>>& metric_values,
    CorrelationMethod method);

std::string to_csv(const CorrelationReport& report);

}  // namespace tierfact::popularity
