#include "citerank/syngen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <random>

#include "citerank/errors.hpp"

namespace citerank {

void GenSettings::validate() const {
  if (n_journals < 1) throw PreconditionError("n_journals must be >= 1");
  if (first_year > last_year) throw PreconditionError("year range is empty");
  if (!(skew_exponent > 0.0) || !std::isfinite(skew_exponent)) {
    throw PreconditionError("skew exponent must be a finite value > 0");
  }
  if (!(mean_out_citations > 0.0) || !std::isfinite(mean_out_citations)) {
    throw PreconditionError("mean out-citations must be a finite value > 0");
  }
}

namespace {

constexpr int kMaxCitationLag = 6;

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const auto r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Poisson by sequential inversion, in chunks of mean <= 16 so that
  /// exp(-mean) stays well away from underflow.
  std::int64_t poisson(double mean) {
    std::int64_t total = 0;
    while (mean > 0.0) {
      const double chunk = std::min(mean, 16.0);
      mean -= chunk;
      const double limit = std::exp(-chunk);
      double product = uniform();
      while (product > limit) {
        ++total;
        product *= uniform();
      }
    }
    return total;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Corpus generate(const GenSettings& s) {
  s.validate();
  Stream rng(s.seed);
  CorpusBuilder builder;

  const auto n = static_cast<std::size_t>(s.n_journals);
  const std::size_t width = std::max<std::size_t>(4, std::to_string(n).size());
  std::vector<double> cumulative(n);
  double total_weight = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto number = std::to_string(i + 1);
    number.insert(0, width - std::min(width, number.size()), '0');
    const auto index = builder.add_journal("J" + number, "Synthetic Journal " + number);

    const double attractiveness = std::pow(1.0 - rng.uniform(), -s.skew_exponent);
    total_weight += attractiveness;
    cumulative[i] = total_weight;

    const auto base = 20 + static_cast<std::int64_t>(rng.below(181));
    for (int year = s.first_year; year <= s.last_year; ++year) {
      const auto jitter = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(base / 5 + 1)));
      builder.set_articles(index, year, base - base / 10 + jitter);
    }
  }

  const auto pick_cited = [&] {
    const double target = rng.uniform() * total_weight;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    return static_cast<JournalIndex>(std::min<std::size_t>(it - cumulative.begin(), n - 1));
  };

  const auto years = static_cast<std::size_t>(s.last_year - s.first_year + 1);
  builder.reserve_citations(static_cast<std::size_t>(s.mean_out_citations * n * years * 1.05));
  for (std::size_t citing = 0; citing < n; ++citing) {
    for (int year = s.first_year; year <= s.last_year; ++year) {
      const auto events = rng.poisson(s.mean_out_citations);
      const int max_lag = std::min(kMaxCitationLag, year - s.first_year);
      for (std::int64_t e = 0; e < events; ++e) {
        const auto cited = pick_cited();
        const int lag = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_lag + 1)));
        builder.add_citation(static_cast<JournalIndex>(citing), cited, year, year - lag, 1);
      }
    }
  }
  return std::move(builder).build();
}

}  // namespace citerank
