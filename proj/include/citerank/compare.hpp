#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/metric_vector.hpp"

namespace citerank {

enum class TiePolicy { average, min };

std::string_view to_string(TiePolicy policy);
/// Accepts "average" or "min"; throws PreconditionError otherwise.
TiePolicy parse_tie_policy(std::string_view text);

struct RankRow {
  std::string id;
  double score = 0.0;
  double rank = 0.0;

  bool operator==(const RankRow&) const = default;
};

/// Rows sorted by score descending, ties displayed in id order.
struct RankTable {
  std::string metric_name;
  TiePolicy tie_policy = TiePolicy::average;
  std::vector<RankRow> rows;

  const RankRow* find(std::string_view id) const;
};

/// Rank 1 is the largest score. Tied scores share the mean of their
/// positions (average) or the first position (min).
RankTable rank(const MetricVector& scores, TiePolicy tie_policy = TiePolicy::average);

struct Correlation {
  double rho = 0.0;
  /// Number of journals the coefficient was computed over.
  std::size_t n = 0;
  /// Journals missing from one side, or (for the log variant) non-positive.
  std::vector<std::string> omitted;
};

/// Pearson correlation of average ranks over the journals present in both
/// vectors. Throws PreconditionError for fewer than 3 common journals or
/// constant ranks.
Correlation spearman(const MetricVector& x, const MetricVector& y);

/// Pearson correlation of (log x, log y). Pairs where either value is
/// non-positive are omitted. Throws PreconditionError for fewer than 3
/// usable pairs or zero variance.
Correlation pearson_log(const MetricVector& x, const MetricVector& y);

struct ConcentrationShare {
  std::size_t k = 0;
  double share = 0.0;
};

/// Share of the total held by the k highest scores, for each k. k larger
/// than the vector is clamped to its size. Throws PreconditionError when the
/// total is zero.
std::vector<ConcentrationShare> concentration(const MetricVector& scores,
                                              std::span<const std::size_t> ks);

/// score(rank i) - score(rank i + 1) in descending order.
std::vector<double> rank_gaps(const MetricVector& scores);

struct EllipseParams {
  double center_x = 0.0;
  double center_y = 0.0;
  double major = 0.0;
  double minor = 0.0;
  /// Angle of the major axis from the x axis, in (-pi/2, pi/2].
  double orientation = 0.0;
  double coverage = 0.0;
  /// Covariance was singular; minor is reported as 0.
  bool degenerate = false;

  /// True if (x, y) lies inside or on the ellipse. Always false for a
  /// degenerate ellipse unless the point is on the major axis segment.
  bool contains(double x, double y) const;
};

/// Coverage ellipse of the bivariate normal fitted to (x, y) by sample mean
/// and covariance: semi-axes sqrt(lambda_i * -2 ln(1 - coverage)).
EllipseParams fit_ellipse(std::span<const double> x, std::span<const double> y, double coverage);

/// fit_ellipse on (log10 x, log10 y) over the usable pairs of two metrics.
EllipseParams density_ellipse(const MetricVector& x, const MetricVector& y, double coverage);

/// Journals present in both vectors with strictly positive values, paired
/// as (id, log10 x, log10 y). Ordered by id.
struct LogPoint {
  std::string id;
  double log_x = 0.0;
  double log_y = 0.0;
};
std::vector<LogPoint> log_pairs(const MetricVector& x, const MetricVector& y);

struct ComparisonReport {
  std::string x_metric;
  std::string y_metric;
  Correlation pearson_log;
  Correlation spearman;
  std::vector<ConcentrationShare> concentration_x;
  std::vector<ConcentrationShare> concentration_y;
  std::vector<double> rank_gaps_x;
  std::vector<double> rank_gaps_y;
  EllipseParams ellipse;
};

ComparisonReport compare_metrics(const MetricVector& x, const MetricVector& y, double coverage,
                                 std::span<const std::size_t> ks);

}  // namespace citerank
