#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

namespace metric_names {
inline constexpr std::string_view total_citations = "total_citations";
inline constexpr std::string_view impact_factor = "impact_factor";
inline constexpr std::string_view eigenfactor = "eigenfactor";
inline constexpr std::string_view custom = "custom";
}  // namespace metric_names

/// One non-negative score per journal id. Ordered by id so that every
/// serialization of the same vector is byte-identical.
struct MetricVector {
  std::string metric_name{metric_names::custom};
  std::map<std::string, double, std::less<>> scores;
  /// Window and parameters the scores were computed with.
  std::string provenance;
  /// Journals the metric could not score (e.g. zero Impact Factor denominator).
  std::vector<std::string> omitted;

  bool contains(std::string_view id) const { return scores.find(id) != scores.end(); }
  std::size_t size() const noexcept { return scores.size(); }
  bool empty() const noexcept { return scores.empty(); }

  bool operator==(const MetricVector&) const = default;
};

/// Throws DataError if any score is negative or non-finite.
void validate(const MetricVector& metric);

// Metric file: header `id,<metric_name>`, then one `id,score` row per journal.
// Scores are written with round-trip precision.
MetricVector read_metric_csv(std::istream& in, const std::string& source = "metric");
void write_metric_csv(std::ostream& out, const MetricVector& metric);

}  // namespace citerank
