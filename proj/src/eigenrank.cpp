#include "citerank/eigenrank.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "citerank/errors.hpp"

namespace citerank {

double CrossCitationMatrix::column_sum(std::size_t column) const {
  double sum = 0.0;
  for (auto k = col_start.at(column); k < col_start.at(column + 1); ++k) sum += value[k];
  return sum;
}

double CrossCitationMatrix::at(std::size_t i, std::size_t j) const {
  for (auto k = col_start.at(j); k < col_start.at(j + 1); ++k) {
    if (row[k] == i) return value[k];
  }
  return 0.0;
}

void EigenSettings::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw PreconditionError("alpha must lie in (0, 1)");
  if (!(tolerance > 0.0)) throw PreconditionError("tolerance must be > 0");
  if (max_iterations < 1) throw PreconditionError("max_iterations must be >= 1");
}

MatrixBuild build_matrix(const Corpus& corpus, const CitationWindow& window, bool exclude_self) {
  if (corpus.empty()) throw PreconditionError("cannot build a matrix for an empty corpus");
  const auto n = corpus.size();
  const auto journals = corpus.journals();

  MatrixBuild out;
  auto& m = out.matrix;
  m.ids.reserve(n);
  for (const auto& j : journals) m.ids.push_back(j.id);

  // Records are sorted by (citing, cited, ...), so columns arrive in order
  // and entries for one (citing, cited) pair are adjacent.
  m.col_start.assign(n + 1, 0);
  const auto records = corpus.citations();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n; ++col) {
    const auto begin = m.value.size();
    double raw_total = 0.0;
    for (; r < records.size() && records[r].citing == col; ++r) {
      const auto& rec = records[r];
      if (exclude_self && rec.self()) continue;
      if (!window.contains(rec)) continue;
      const auto weight = static_cast<double>(rec.count);
      raw_total += weight;
      if (m.value.size() > begin && m.row.back() == rec.cited) {
        m.value.back() += weight;
      } else {
        m.row.push_back(rec.cited);
        m.value.push_back(weight);
      }
    }
    if (raw_total == 0.0) {
      m.dangling.push_back(static_cast<std::uint32_t>(col));
    } else {
      for (auto k = begin; k < m.value.size(); ++k) m.value[k] /= raw_total;
    }
    m.col_start[col + 1] = m.value.size();
  }

  double total_articles = 0.0;
  auto& w = out.articles.weights;
  w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t count = 0;
    for (const auto& [year, articles] : journals[i].articles_by_year) {
      if (window.covers_publication_year(year)) count += articles;
    }
    w[i] = static_cast<double>(count);
    total_articles += w[i];
  }
  if (total_articles == 0.0) {
    throw PreconditionError("no journal has articles in the window (" + window.describe() + ")");
  }
  for (auto& x : w) x /= total_articles;
  return out;
}

namespace {

void check_shapes(const CrossCitationMatrix& matrix, const ArticleVector& articles) {
  if (matrix.order() == 0) throw PreconditionError("matrix is empty");
  if (articles.weights.size() != matrix.order() || matrix.col_start.size() != matrix.order() + 1) {
    throw PreconditionError("matrix and article vector do not share an index");
  }
}

// y = H p + (dangling mass of p) * a
void citation_flow(const CrossCitationMatrix& m, const std::vector<double>& a,
                   const std::vector<double>& p, std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  const auto n = m.order();
  for (std::size_t j = 0; j < n; ++j) {
    const double pj = p[j];
    for (auto k = m.col_start[j]; k < m.col_start[j + 1]; ++k) y[m.row[k]] += m.value[k] * pj;
  }
  double dangling_mass = 0.0;
  for (auto j : m.dangling) dangling_mass += p[j];
  if (dangling_mass != 0.0) {
    for (std::size_t i = 0; i < n; ++i) y[i] += dangling_mass * a[i];
  }
}

MetricVector to_percent_shares(const std::vector<std::string>& ids, const std::vector<double>& flow) {
  double total = 0.0;
  for (double x : flow) total += x;
  MetricVector metric;
  metric.metric_name = metric_names::eigenfactor;
  for (std::size_t i = 0; i < ids.size(); ++i) metric.scores.emplace(ids[i], 100.0 * flow[i] / total);
  return metric;
}

std::string shortest(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string describe(const EigenSettings& s) {
  return "alpha=" + shortest(s.alpha) + ", tolerance=" + shortest(s.tolerance) +
         ", max_iterations=" + std::to_string(s.max_iterations) +
         (s.exclude_self ? ", self-citations excluded" : ", self-citations included");
}

}  // namespace

EigenResult eigen_scores(const CrossCitationMatrix& matrix, const ArticleVector& articles,
                         const EigenSettings& settings) {
  settings.validate();
  check_shapes(matrix, articles);
  const auto n = matrix.order();
  const auto& a = articles.weights;
  const double alpha = settings.alpha;

  std::vector<double> p = a;
  std::vector<double> next(n);
  EigenResult result;
  double residual = 0.0;
  int iteration = 0;
  bool converged = false;
  while (iteration < settings.max_iterations) {
    ++iteration;
    citation_flow(matrix, a, p, next);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = alpha * next[i] + (1.0 - alpha) * a[i];
      residual += std::abs(next[i] - p[i]);
    }
    p.swap(next);
    if (residual < settings.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError(iteration, residual);

  citation_flow(matrix, a, p, next);
  result.scores = to_percent_shares(matrix.ids, next);
  result.scores.provenance = describe(settings) + ", iterations=" + std::to_string(iteration);
  result.stationary = std::move(p);
  result.iterations = iteration;
  result.residual = residual;
  return result;
}

MetricVector dense_oracle_scores(const CrossCitationMatrix& matrix, const ArticleVector& articles,
                                 const EigenSettings& settings) {
  settings.validate();
  check_shapes(matrix, articles);
  const auto n = matrix.order();
  if (n > kDenseOracleMaxOrder) {
    throw PreconditionError("dense oracle is limited to " + std::to_string(kDenseOracleMaxOrder) +
                            " journals");
  }
  const auto& a = articles.weights;
  const double alpha = settings.alpha;

  std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) h[i][j] = matrix.at(i, j);
  }
  std::vector<bool> is_dangling(n, false);
  for (auto j : matrix.dangling) is_dangling[j] = true;

  // Dangling columns replaced by a, then damped towards a.
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double walk = is_dangling[j] ? a[i] : h[i][j];
      g[i][j] = alpha * walk + (1.0 - alpha) * a[i];
    }
  }

  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> q(n);
  for (int it = 0; it < kDenseOracleIterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += g[i][j] * p[j];
      q[i] = s;
    }
    p.swap(q);
  }

  std::vector<double> flow(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) flow[i] += (is_dangling[j] ? a[i] : h[i][j]) * p[j];
  }
  double total = 0.0;
  for (double x : flow) total += x;
  MetricVector metric;
  metric.metric_name = metric_names::eigenfactor;
  for (std::size_t i = 0; i < n; ++i) metric.scores.emplace(matrix.ids[i], 100.0 * flow[i] / total);
  metric.provenance = "dense oracle, " + describe(settings);
  return metric;
}

EigenResult eigenfactor(const Corpus& corpus, const CitationWindow& window,
                        const EigenSettings& settings) {
  settings.validate();
  const auto built = build_matrix(corpus, window, settings.exclude_self);
  auto result = eigen_scores(built.matrix, built.articles, settings);
  result.scores.provenance = window.describe() + ", " + result.scores.provenance;
  return result;
}

}  // namespace citerank
