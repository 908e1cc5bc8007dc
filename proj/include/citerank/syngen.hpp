#pragma once

#include <cstdint>

#include "citerank/corpus.hpp"

namespace citerank {

struct GenSettings {
  int n_journals = 50;
  int first_year = 2002;
  int last_year = 2006;
  /// Journal attractiveness is (1 - u)^(-skew_exponent) for uniform u, i.e.
  /// Pareto with tail index 1 / skew_exponent. Larger means heavier tail.
  double skew_exponent = 1.0;
  /// Expected citations each journal makes per citing year.
  double mean_out_citations = 10.0;
  std::uint64_t seed = 1;

  /// Throws PreconditionError on an invalid combination.
  void validate() const;
};

/// Seeded synthetic corpus. The random stream is std::mt19937_64, whose
/// output sequence is fixed by the standard, and every draw is derived from
/// it with arithmetic defined here, so a seed reproduces the same corpus on
/// every platform.
Corpus generate(const GenSettings& settings);

}  // namespace citerank
