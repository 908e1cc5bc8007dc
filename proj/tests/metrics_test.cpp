#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "citerank/errors.hpp"
#include "citerank/metrics.hpp"
#include "test_support.hpp"

using namespace citerank;

namespace {

Corpus two_journals() {
  CorpusBuilder b;
  const auto a = b.add_journal("A", "Alpha");
  const auto c = b.add_journal("B", "Beta");
  b.set_articles(a, 2005, 3);
  b.set_articles(c, 2005, 1);
  b.add_citation(a, c, 2006, 2005, 5);
  return std::move(b).build();
}

Corpus scaled(const Corpus& corpus, std::int64_t factor) {
  CorpusBuilder b;
  for (const auto& j : corpus.journals()) {
    const auto i = b.add_journal(j.id, j.name);
    for (const auto& [y, n] : j.articles_by_year) b.set_articles(i, y, n * factor);
  }
  for (const auto& r : corpus.citations()) {
    b.add_citation(r.citing, r.cited, r.citing_year, r.cited_year, r.count * factor);
  }
  return std::move(b).build();
}

}  // namespace

TEST(TotalCitations, SingleRecord) {
  const auto m = total_citations(two_journals(), CitationWindow::all_years());
  EXPECT_EQ(m.metric_name, "total_citations");
  EXPECT_EQ(m.scores.at("A"), 0.0);
  EXPECT_EQ(m.scores.at("B"), 5.0);
}

TEST(TotalCitations, SelfLoopExcluded) {
  CorpusBuilder b;
  const auto a = b.add_journal("A", "");
  b.add_journal("B", "");
  b.add_citation(a, a, 2006, 2004, 7);
  const auto corpus = std::move(b).build();
  const auto without = total_citations(corpus, CitationWindow::all_years(), false);
  for (const auto& [id, s] : without.scores) EXPECT_EQ(s, 0.0) << id;
  EXPECT_EQ(total_citations(corpus, CitationWindow::all_years()).scores.at("A"), 7.0);
}

TEST(TotalCitations, AllYearsIsSumOverCitingYears) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto corpus = support::random_corpus(rng, 15, 300, 1998, 2006);
    const auto all = total_citations(corpus, CitationWindow::all_years());
    std::map<std::string, double> summed;
    for (int year = 1998; year <= 2006; ++year) {
      CorpusBuilder b;
      for (const auto& j : corpus.journals()) b.add_journal(j.id, j.name);
      for (const auto& r : corpus.citations()) {
        if (r.citing_year == year) b.add_citation(r.citing, r.cited, r.citing_year, r.cited_year, r.count);
      }
      for (const auto& [id, s] : total_citations(std::move(b).build(), CitationWindow::all_years()).scores) {
        summed[id] += s;
      }
    }
    for (const auto& [id, s] : all.scores) EXPECT_EQ(s, summed[id]) << id;
  }
}

TEST(ImpactFactor, DirectQuotient) {
  CorpusBuilder b;
  const auto a = b.add_journal("A", "");
  const auto c = b.add_journal("C", "");
  b.set_articles(a, 2004, 2);
  b.set_articles(a, 2005, 3);
  b.set_articles(c, 2004, 4);
  b.set_articles(c, 2005, 4);
  b.add_citation(c, a, 2006, 2005, 6);
  b.add_citation(a, a, 2006, 2004, 4);  // self-citations count
  b.add_citation(c, a, 2006, 2003, 50);  // outside the two-year window
  b.add_citation(c, a, 2005, 2004, 50);  // wrong census year
  const auto m = impact_factor(std::move(b).build(), 2006);
  EXPECT_EQ(m.scores.at("A"), 2.0);
  EXPECT_EQ(m.scores.at("C"), 0.0);
  EXPECT_TRUE(m.omitted.empty());
}

TEST(ImpactFactor, ZeroDenominatorIsOmittedAndReported) {
  CorpusBuilder b;
  const auto a = b.add_journal("A", "");
  const auto z = b.add_journal("Z", "");
  b.set_articles(a, 2005, 5);
  b.set_articles(z, 2006, 5);  // articles only in the census year itself
  b.add_citation(a, z, 2006, 2006, 3);
  const auto m = impact_factor(std::move(b).build(), 2006);
  EXPECT_FALSE(m.contains("Z"));
  ASSERT_EQ(m.omitted.size(), 1u);
  EXPECT_EQ(m.omitted[0], "Z");
  EXPECT_NE(m.provenance.find("omitted"), std::string::npos);
}

TEST(ImpactFactor, CensusYearOutsideDataIsRejected) {
  EXPECT_THROW(impact_factor(two_journals(), 2030), PreconditionError);
  EXPECT_THROW(impact_factor(Corpus{}, 2006), PreconditionError);
}

TEST(ImpactFactor, ScaleInvariantAndOmissionsMatchDenominators) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto corpus = support::random_corpus(rng, 20, 250, 2000, 2006);
    const auto base = impact_factor(corpus, 2006);
    for (std::int64_t factor : {2, 3, 17}) {
      EXPECT_EQ(impact_factor(scaled(corpus, factor), 2006), base);
    }
    for (const auto& j : corpus.journals()) {
      const bool zero = j.articles_between(2004, 2005) == 0;
      EXPECT_EQ(base.contains(j.id), !zero);
      EXPECT_EQ(std::count(base.omitted.begin(), base.omitted.end(), j.id), zero ? 1 : 0);
    }
    for (const auto& [id, s] : base.scores) EXPECT_TRUE(std::isfinite(s) && s >= 0.0);
  }
}
