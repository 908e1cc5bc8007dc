#include "citerank/compare.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "citerank/errors.hpp"

namespace citerank {

std::string_view to_string(TiePolicy policy) {
  return policy == TiePolicy::average ? "average" : "min";
}

TiePolicy parse_tie_policy(std::string_view text) {
  if (text == "average") return TiePolicy::average;
  if (text == "min") return TiePolicy::min;
  throw PreconditionError("unknown tie policy '" + std::string(text) + "'");
}

const RankRow* RankTable::find(std::string_view id) const {
  for (const auto& row : rows) {
    if (row.id == id) return &row;
  }
  return nullptr;
}

RankTable rank(const MetricVector& scores, TiePolicy tie_policy) {
  if (scores.empty()) throw PreconditionError("cannot rank an empty metric");
  RankTable table;
  table.metric_name = scores.metric_name;
  table.tie_policy = tie_policy;
  table.rows.reserve(scores.size());
  for (const auto& [id, score] : scores.scores) table.rows.push_back({id, score, 0.0});
  // Input is in id order; a stable sort keeps that order within ties.
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const RankRow& a, const RankRow& b) { return a.score > b.score; });

  auto& rows = table.rows;
  for (std::size_t first = 0; first < rows.size();) {
    std::size_t last = first;
    while (last + 1 < rows.size() && rows[last + 1].score == rows[first].score) ++last;
    const double r = tie_policy == TiePolicy::min
                         ? static_cast<double>(first + 1)
                         : 0.5 * static_cast<double>(first + 1 + last + 1);
    for (auto i = first; i <= last; ++i) rows[i].rank = r;
    first = last + 1;
  }
  return table;
}

namespace {

// Average ranks of `values`, rank 1 = largest.
std::vector<double> average_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t first = 0; first < order.size();) {
    std::size_t last = first;
    while (last + 1 < order.size() && values[order[last + 1]] == values[order[first]]) ++last;
    const double r = 0.5 * static_cast<double>(first + 1 + last + 1);
    for (auto i = first; i <= last; ++i) ranks[order[i]] = r;
    first = last + 1;
  }
  return ranks;
}

// Symmetric in its arguments bit for bit: every step is a commutative
// operation on the paired terms.
double pearson(const std::vector<double>& x, const std::vector<double>& y, const char* what) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw PreconditionError(std::string(what) + " is undefined: zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct Paired {
  std::vector<std::string> ids;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::string> omitted;
};

Paired pair_up(const MetricVector& x, const MetricVector& y, bool positive_only) {
  Paired p;
  auto ix = x.scores.begin();
  auto iy = y.scores.begin();
  // Both maps are id-ordered: merge walk.
  while (ix != x.scores.end() || iy != y.scores.end()) {
    if (iy == y.scores.end() || (ix != x.scores.end() && ix->first < iy->first)) {
      p.omitted.push_back(ix->first);
      ++ix;
    } else if (ix == x.scores.end() || iy->first < ix->first) {
      p.omitted.push_back(iy->first);
      ++iy;
    } else {
      if (positive_only && !(ix->second > 0.0 && iy->second > 0.0)) {
        p.omitted.push_back(ix->first);
      } else {
        p.ids.push_back(ix->first);
        p.x.push_back(ix->second);
        p.y.push_back(iy->second);
      }
      ++ix;
      ++iy;
    }
  }
  return p;
}

}  // namespace

Correlation spearman(const MetricVector& x, const MetricVector& y) {
  auto p = pair_up(x, y, false);
  if (p.ids.size() < 3) {
    throw PreconditionError("spearman requires at least 3 journals common to both metrics (found " +
                            std::to_string(p.ids.size()) + ")");
  }
  Correlation c;
  c.rho = pearson(average_ranks(p.x), average_ranks(p.y), "spearman");
  c.n = p.ids.size();
  c.omitted = std::move(p.omitted);
  return c;
}

Correlation pearson_log(const MetricVector& x, const MetricVector& y) {
  auto p = pair_up(x, y, true);
  if (p.ids.size() < 3) {
    throw PreconditionError(
        "pearson_log requires at least 3 journals with positive values in both metrics (found " +
        std::to_string(p.ids.size()) + ")");
  }
  for (auto& v : p.x) v = std::log10(v);
  for (auto& v : p.y) v = std::log10(v);
  Correlation c;
  c.rho = pearson(p.x, p.y, "pearson_log");
  c.n = p.ids.size();
  c.omitted = std::move(p.omitted);
  return c;
}

std::vector<ConcentrationShare> concentration(const MetricVector& scores,
                                              std::span<const std::size_t> ks) {
  validate(scores);
  std::vector<double> sorted;
  sorted.reserve(scores.size());
  for (const auto& [id, s] : scores.scores) sorted.push_back(s);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> prefix(sorted.size() + 1, 0.0);
  for (std::size_t i = 0; i < sorted.size(); ++i) prefix[i + 1] = prefix[i] + sorted[i];
  const double total = prefix.back();
  if (total == 0.0) throw PreconditionError("concentration is undefined: total score is zero");

  std::vector<ConcentrationShare> out;
  out.reserve(ks.size());
  for (auto k : ks) out.push_back({k, prefix[std::min(k, sorted.size())] / total});
  return out;
}

std::vector<double> rank_gaps(const MetricVector& scores) {
  if (scores.size() < 2) throw PreconditionError("rank_gaps requires at least 2 journals");
  std::vector<double> sorted;
  sorted.reserve(scores.size());
  for (const auto& [id, s] : scores.scores) sorted.push_back(s);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> gaps(sorted.size() - 1);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) gaps[i] = sorted[i] - sorted[i + 1];
  return gaps;
}

bool EllipseParams::contains(double x, double y) const {
  const double dx = x - center_x;
  const double dy = y - center_y;
  const double c = std::cos(orientation);
  const double s = std::sin(orientation);
  const double u = dx * c + dy * s;
  const double v = -dx * s + dy * c;
  if (major == 0.0) return u == 0.0 && v == 0.0;
  if (degenerate || minor == 0.0) return std::abs(v) <= 1e-12 * major && std::abs(u) <= major;
  return (u * u) / (major * major) + (v * v) / (minor * minor) <= 1.0;
}

EllipseParams fit_ellipse(std::span<const double> x, std::span<const double> y, double coverage) {
  if (x.size() != y.size()) throw PreconditionError("ellipse inputs differ in length");
  if (x.size() < 3) throw PreconditionError("ellipse requires at least 3 points");
  if (!(coverage > 0.0 && coverage < 1.0)) throw PreconditionError("coverage must lie in (0, 1)");

  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  sxx /= n - 1.0;
  syy /= n - 1.0;
  sxy /= n - 1.0;

  // Closed-form eigenvalues of the symmetric 2x2 covariance.
  const double half_trace = 0.5 * (sxx + syy);
  const double radius = std::hypot(0.5 * (sxx - syy), sxy);
  const double large = half_trace + radius;
  double small = half_trace - radius;

  EllipseParams e;
  e.center_x = mx;
  e.center_y = my;
  e.coverage = coverage;
  e.orientation = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  if (small <= 1e-12 * large) {
    small = 0.0;
    e.degenerate = true;
  }
  const double scale = -2.0 * std::log1p(-coverage);
  e.major = std::sqrt(std::max(large, 0.0) * scale);
  e.minor = std::sqrt(small * scale);
  return e;
}

std::vector<LogPoint> log_pairs(const MetricVector& x, const MetricVector& y) {
  auto p = pair_up(x, y, true);
  std::vector<LogPoint> out;
  out.reserve(p.ids.size());
  for (std::size_t i = 0; i < p.ids.size(); ++i) {
    out.push_back({std::move(p.ids[i]), std::log10(p.x[i]), std::log10(p.y[i])});
  }
  return out;
}

EllipseParams density_ellipse(const MetricVector& x, const MetricVector& y, double coverage) {
  const auto points = log_pairs(x, y);
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& pt : points) {
    lx.push_back(pt.log_x);
    ly.push_back(pt.log_y);
  }
  return fit_ellipse(lx, ly, coverage);
}

ComparisonReport compare_metrics(const MetricVector& x, const MetricVector& y, double coverage,
                                 std::span<const std::size_t> ks) {
  ComparisonReport report;
  report.x_metric = x.metric_name;
  report.y_metric = y.metric_name;
  report.pearson_log = pearson_log(x, y);
  report.spearman = spearman(x, y);
  report.concentration_x = concentration(x, ks);
  report.concentration_y = concentration(y, ks);
  report.rank_gaps_x = rank_gaps(x);
  report.rank_gaps_y = rank_gaps(y);
  report.ellipse = density_ellipse(x, y, coverage);
  return report;
}

}  // namespace citerank
