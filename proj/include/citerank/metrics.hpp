#pragma once

#include "citerank/corpus.hpp"
#include "citerank/metric_vector.hpp"

namespace citerank {

/// Unweighted citations received per journal within `window`. Every journal
/// in the corpus gets a score (0 when uncited).
MetricVector total_citations(const Corpus& corpus, const CitationWindow& window,
                             bool include_self = true);

/// Two-year Impact Factor for `census_year`: citations made in census_year to
/// items from the two preceding years, over the article count of those
/// years. Journals with no articles in those years are left out of the
/// scores and listed in `omitted`.
///
/// Throws PreconditionError if census_year lies outside the corpus's years.
MetricVector impact_factor(const Corpus& corpus, int census_year);

}  // namespace citerank
