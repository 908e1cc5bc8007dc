#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "citerank/corpus.hpp"
#include "citerank/errors.hpp"
#include "citerank/syngen.hpp"
#include "test_support.hpp"

using namespace citerank;

namespace {

const char* kJournals =
    "id,name,year,articles\n"
    "A,Alpha,2005,10\n"
    "A,Alpha,2006,12\n"
    "B,\"Beta, Journal of\",2005,4\n"
    "C,Gamma,,\n";

Corpus parse(const std::string& journals, const std::string& citations) {
  std::istringstream j(journals), c(citations);
  return parse_corpus(j, c);
}

std::size_t error_line(const std::string& journals, const std::string& citations) {
  try {
    parse(journals, citations);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string serialize(const Corpus& corpus) {
  std::ostringstream j, c;
  write_corpus(corpus, j, c);
  return j.str() + "\n--\n" + c.str();
}

Corpus reparse(const Corpus& corpus) {
  std::ostringstream j, c;
  write_corpus(corpus, j, c);
  return parse(j.str(), c.str());
}

MetricVector covering(const Corpus& corpus, std::size_t count) {
  MetricVector m;
  for (std::size_t i = 0; i < count && i < corpus.size(); ++i) {
    m.scores.emplace(corpus.journals()[i].id, 1.0);
  }
  return m;
}

}  // namespace

TEST(Corpus, EmptyCitationsFile) {
  const auto corpus = parse(kJournals, "citing,cited,citing_year,cited_year,count\n");
  EXPECT_EQ(corpus.size(), 3u);
  EXPECT_TRUE(corpus.citations().empty());
  EXPECT_EQ(corpus.journal(1).name, "Beta, Journal of");
  EXPECT_EQ(corpus.journal(0).articles_in(2006), 12);
  EXPECT_EQ(corpus.journal(0).articles_in(2004), 0);
  EXPECT_TRUE(corpus.journal(2).articles_by_year.empty());
}

TEST(Corpus, RepeatedRowsMergeBySummation) {
  const auto corpus = parse(kJournals,
                            "citing,cited,citing_year,cited_year,count\n"
                            "A,B,2006,2005,2\n"
                            "A,B,2006,2005,2\n");
  ASSERT_EQ(corpus.citations().size(), 1u);
  EXPECT_EQ(corpus.citations()[0].count, 4);
}

TEST(Corpus, ParseErrorsCarryLineNumbers) {
  const std::string header = "citing,cited,citing_year,cited_year,count\n";
  EXPECT_EQ(error_line(kJournals, header + "A,B,2006,2005,1\nA,Z,2006,2005,1\n"), 3u);
  EXPECT_EQ(error_line(kJournals, header + "A,B,2006,2005,0\n"), 2u);
  EXPECT_EQ(error_line(kJournals, header + "A,B,2006,2005,-3\n"), 2u);
  EXPECT_EQ(error_line(kJournals, header + "A,B,2005,2006,1\n"), 2u);
  EXPECT_EQ(error_line(kJournals, header + "A,B,2006,2005\n"), 2u);
  EXPECT_EQ(error_line(kJournals, header + "A,B,20x6,2005,1\n"), 2u);
  EXPECT_EQ(error_line(kJournals, "id,name\n"), 1u);
  EXPECT_EQ(error_line("id,name,year,articles\nA,Alpha,2005,1\nA,Alpha,2005,2\n", header), 3u);
  EXPECT_EQ(error_line("id,name,year,articles\nA,Alpha,2005,1\nA,Other,2006,2\n", header), 3u);
  EXPECT_EQ(error_line("id,name,year,articles\nA,Alpha,2005,-1\n", header), 2u);
  EXPECT_EQ(error_line("id,name,year,articles\nA,Alpha,,5\n", header), 2u);
}

TEST(Corpus, UnknownIdIsAnError) {
  EXPECT_THROW(parse(kJournals, "citing,cited,citing_year,cited_year,count\nQ,A,2006,2006,1\n"),
               DataError);
}

TEST(Corpus, WriteThenParseIsIdentity) {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 10; ++trial) {
    const auto corpus = support::random_corpus(rng, 50, 400);
    const auto back = reparse(corpus);
    EXPECT_EQ(back, corpus);
    EXPECT_EQ(serialize(back), serialize(corpus));
  }
  GenSettings s;
  s.n_journals = 50;
  s.seed = 99;
  const auto generated = generate(s);
  EXPECT_EQ(reparse(generated), generated);
}

TEST(Corpus, MergingIsIdempotentAndOrderIndependent) {
  std::mt19937_64 rng(7);
  const auto corpus = support::random_corpus(rng, 12, 300);

  // Rebuilding from already-merged records changes nothing.
  CorpusBuilder again;
  for (const auto& j : corpus.journals()) {
    const auto i = again.add_journal(j.id, j.name);
    for (const auto& [y, n] : j.articles_by_year) again.set_articles(i, y, n);
  }
  for (const auto& r : corpus.citations()) {
    again.add_citation(r.citing, r.cited, r.citing_year, r.cited_year, r.count);
  }
  EXPECT_EQ(std::move(again).build(), corpus);

  // Splitting every record into unit rows and shuffling preserves totals.
  std::vector<CitationRecord> units;
  for (const auto& r : corpus.citations()) {
    for (std::int64_t k = 0; k < r.count; ++k) units.push_back({r.citing, r.cited, r.citing_year, r.cited_year, 1});
  }
  std::shuffle(units.begin(), units.end(), rng);
  CorpusBuilder shuffled;
  for (const auto& j : corpus.journals()) {
    const auto i = shuffled.add_journal(j.id, j.name);
    for (const auto& [y, n] : j.articles_by_year) shuffled.set_articles(i, y, n);
  }
  for (const auto& r : units) shuffled.add_citation(r.citing, r.cited, r.citing_year, r.cited_year, 1);
  const auto rebuilt = std::move(shuffled).build();
  EXPECT_EQ(rebuilt.total_count(), corpus.total_count());
  EXPECT_EQ(rebuilt, corpus);
}

TEST(Corpus, FilterDropsUnscoredJournals) {
  GenSettings s;
  s.n_journals = 171;
  s.seed = 2006;
  const auto corpus = generate(s);
  const auto result = filter_to_scored(corpus, covering(corpus, 165));
  EXPECT_EQ(result.corpus.size(), 165u);
  EXPECT_EQ(result.removed.size(), 6u);
  for (const auto& r : result.corpus.citations()) {
    EXPECT_LT(r.citing, 165u);
    EXPECT_LT(r.cited, 165u);
  }
  // Edges among kept journals survive with their counts.
  std::int64_t kept = 0;
  for (const auto& r : corpus.citations()) {
    if (r.citing < 165 && r.cited < 165) kept += r.count;
  }
  EXPECT_EQ(result.corpus.total_count(), kept);
}

TEST(Corpus, FilterIdentityAnnihilationAndIdempotence) {
  std::mt19937_64 rng(3);
  const auto corpus = support::random_corpus(rng, 20, 200);

  const auto all = filter_to_scored(corpus, covering(corpus, corpus.size()));
  EXPECT_EQ(all.corpus, corpus);
  EXPECT_TRUE(all.removed.empty());

  const auto none = filter_to_scored(corpus, MetricVector{});
  EXPECT_EQ(none.corpus.size(), 0u);
  EXPECT_TRUE(none.corpus.citations().empty());
  EXPECT_EQ(none.removed.size(), corpus.size());

  MetricVector some;
  for (std::size_t i = 0; i < corpus.size(); i += 3) some.scores.emplace(corpus.journals()[i].id, 0.5);
  const auto once = filter_to_scored(corpus, some);
  const auto twice = filter_to_scored(once.corpus, some);
  EXPECT_EQ(twice.corpus, once.corpus);
  EXPECT_TRUE(twice.removed.empty());
}

TEST(CitationWindow, SelectsCensusYearAndPublicationRange) {
  const auto w = CitationWindow::cited(2006, 2);
  EXPECT_TRUE(w.contains({0, 1, 2006, 2005, 1}));
  EXPECT_TRUE(w.contains({0, 1, 2006, 2004, 1}));
  EXPECT_FALSE(w.contains({0, 1, 2006, 2003, 1}));
  EXPECT_FALSE(w.contains({0, 1, 2006, 2006, 1}));
  EXPECT_FALSE(w.contains({0, 1, 2005, 2004, 1}));
  EXPECT_TRUE(CitationWindow::all_years().contains({0, 1, 1990, 1950, 1}));
  EXPECT_THROW(CitationWindow::cited(2006, 0), PreconditionError);
}
