#pragma once

// Iteratively weighted journal scores.
//
// A citation from journal j is worth more when j itself is heavily cited by
// heavily cited journals. The scores are the stationary distribution of a
// random walk over the column-normalized cross-citation matrix H, damped
// towards the article-share vector a:
//
//   p <- alpha * (H p + (mass of p on dangling columns) * a) + (1 - alpha) * a
//
// starting from p = a. The reported score of journal i is its share of the
// weighted citation flow H p + (dangling mass) * a, scaled to sum to 100. The
// teleportation term is left out of that final step.

#include <cstdint>
#include <string>
#include <vector>

#include "citerank/corpus.hpp"
#include "citerank/metric_vector.hpp"

namespace citerank {

/// Column-stochastic citation matrix in compressed sparse column form. Entry
/// (i, j) is the fraction of journal j's outgoing citations that go to i.
struct CrossCitationMatrix {
  /// Journal id at each row/column position.
  std::vector<std::string> ids;
  /// col_start[j]..col_start[j+1] indexes the entries of column j.
  std::vector<std::size_t> col_start{0};
  std::vector<std::uint32_t> row;
  std::vector<double> value;
  /// Columns whose raw citation total was zero; left as all-zero columns.
  std::vector<std::uint32_t> dangling;

  std::size_t order() const noexcept { return ids.size(); }
  std::size_t nonzeros() const noexcept { return value.size(); }
  double column_sum(std::size_t column) const;
  /// Entry (i, j), zero when not stored. Linear in the column length.
  double at(std::size_t i, std::size_t j) const;
};

/// Each journal's share of all articles in the window. Sums to 1.
struct ArticleVector {
  std::vector<double> weights;
};

struct EigenSettings {
  double alpha = 0.85;
  double tolerance = 1e-12;
  int max_iterations = 1000;
  bool exclude_self = true;

  /// Throws PreconditionError unless 0 < alpha < 1, tolerance > 0 and
  /// max_iterations >= 1.
  void validate() const;
};

struct MatrixBuild {
  CrossCitationMatrix matrix;
  ArticleVector articles;
};

/// Builds H and a from the citation records inside `window`. Article shares
/// use the window's publication years (every year in all-years mode).
///
/// Throws PreconditionError if the corpus is empty or has no articles in the
/// window.
MatrixBuild build_matrix(const Corpus& corpus, const CitationWindow& window, bool exclude_self);

struct EigenResult {
  MetricVector scores;
  /// Converged stationary vector p, indexed like the matrix.
  std::vector<double> stationary;
  int iterations = 0;
  double residual = 0.0;
};

/// Sparse power iteration. Runs until the L1 change between iterates falls
/// below settings.tolerance; throws ConvergenceError after max_iterations.
/// Deterministic: the matrix-vector product runs in a fixed order.
EigenResult eigen_scores(const CrossCitationMatrix& matrix, const ArticleVector& articles,
                         const EigenSettings& settings);

/// Reference implementation for small instances: forms the full dense
/// damped transition matrix and applies it 10,000 times to the uniform
/// vector. Throws PreconditionError if the order exceeds 64.
MetricVector dense_oracle_scores(const CrossCitationMatrix& matrix, const ArticleVector& articles,
                                 const EigenSettings& settings);

inline constexpr std::size_t kDenseOracleMaxOrder = 64;
inline constexpr int kDenseOracleIterations = 10'000;

/// build_matrix followed by eigen_scores with the window recorded in the
/// provenance.
EigenResult eigenfactor(const Corpus& corpus, const CitationWindow& window,
                        const EigenSettings& settings);

}  // namespace citerank
