#include "citerank/metrics.hpp"

#include "citerank/errors.hpp"

namespace citerank {

MetricVector total_citations(const Corpus& corpus, const CitationWindow& window,
                             bool include_self) {
  std::vector<std::int64_t> received(corpus.size(), 0);
  for (const auto& record : corpus.citations()) {
    if (!include_self && record.self()) continue;
    if (window.contains(record)) received[record.cited] += record.count;
  }

  MetricVector metric;
  metric.metric_name = metric_names::total_citations;
  metric.provenance = window.describe() + (include_self ? ", self-citations included"
                                                        : ", self-citations excluded");
  const auto journals = corpus.journals();
  for (std::size_t i = 0; i < journals.size(); ++i) {
    metric.scores.emplace(journals[i].id, static_cast<double>(received[i]));
  }
  return metric;
}

MetricVector impact_factor(const Corpus& corpus, int census_year) {
  const auto range = corpus.year_range();
  if (!range || census_year < range->first || census_year > range->second) {
    throw PreconditionError("census year " + std::to_string(census_year) +
                            " is outside the corpus's year range");
  }

  const auto window = CitationWindow::cited(census_year, 2);
  std::vector<std::int64_t> received(corpus.size(), 0);
  for (const auto& record : corpus.citations()) {
    if (window.contains(record)) received[record.cited] += record.count;
  }

  MetricVector metric;
  metric.metric_name = metric_names::impact_factor;
  const auto journals = corpus.journals();
  for (std::size_t i = 0; i < journals.size(); ++i) {
    const auto articles = journals[i].articles_between(census_year - 2, census_year - 1);
    if (articles == 0) {
      metric.omitted.push_back(journals[i].id);
      continue;
    }
    metric.scores.emplace(journals[i].id,
                          static_cast<double>(received[i]) / static_cast<double>(articles));
  }
  metric.provenance = window.describe() + ", self-citations included";
  if (!metric.omitted.empty()) {
    metric.provenance += ", " + std::to_string(metric.omitted.size()) +
                         " journal(s) omitted for zero article count";
  }
  return metric;
}

}  // namespace citerank
