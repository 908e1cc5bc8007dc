#include "citerank/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

std::int64_t Journal::articles_in(int year) const {
  auto it = articles_by_year.find(year);
  return it == articles_by_year.end() ? 0 : it->second;
}

std::int64_t Journal::articles_between(int first, int last) const {
  std::int64_t total = 0;
  for (auto it = articles_by_year.lower_bound(first);
       it != articles_by_year.end() && it->first <= last; ++it) {
    total += it->second;
  }
  return total;
}

std::int64_t Journal::articles_total() const {
  std::int64_t total = 0;
  for (const auto& [year, count] : articles_by_year) total += count;
  return total;
}

CitationWindow CitationWindow::cited(int census_year, int span) {
  if (span < 1) throw PreconditionError("citation window span must be >= 1");
  return {WindowMode::cited_window, census_year, span};
}

bool CitationWindow::contains(const CitationRecord& record) const noexcept {
  if (mode == WindowMode::all_years) return true;
  return record.citing_year == census_year && covers_publication_year(record.cited_year);
}

bool CitationWindow::covers_publication_year(int year) const noexcept {
  if (mode == WindowMode::all_years) return true;
  return year >= census_year - span && year <= census_year - 1;
}

std::string CitationWindow::describe() const {
  if (mode == WindowMode::all_years) return "all years";
  return "citations in " + std::to_string(census_year) + " to items published " +
         std::to_string(census_year - span) + "-" + std::to_string(census_year - 1);
}

std::optional<JournalIndex> Corpus::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t Corpus::total_count() const noexcept {
  std::int64_t total = 0;
  for (const auto& record : citations_) total += record.count;
  return total;
}

std::optional<std::pair<int, int>> Corpus::year_range() const {
  std::optional<std::pair<int, int>> range;
  auto extend = [&](int year) {
    if (!range) {
      range.emplace(year, year);
    } else {
      range->first = std::min(range->first, year);
      range->second = std::max(range->second, year);
    }
  };
  for (const auto& journal : journals_) {
    for (const auto& [year, count] : journal.articles_by_year) extend(year);
  }
  for (const auto& record : citations_) {
    extend(record.citing_year);
    extend(record.cited_year);
  }
  return range;
}

JournalIndex CorpusBuilder::add_journal(std::string id, std::string name) {
  if (id.empty()) throw DataError("journal id must not be empty");
  if (corpus_.index_.contains(id)) throw DataError("duplicate journal id '" + id + "'");
  const auto index = static_cast<JournalIndex>(corpus_.journals_.size());
  corpus_.index_.emplace(id, index);
  corpus_.journals_.push_back(Journal{std::move(id), std::move(name), {}});
  return index;
}

JournalIndex CorpusBuilder::declare_journal(std::string_view id, std::string_view name) {
  if (auto existing = corpus_.find(id)) {
    if (corpus_.journals_[*existing].name != name) {
      throw DataError("journal '" + std::string(id) + "' declared with conflicting names");
    }
    return *existing;
  }
  return add_journal(std::string(id), std::string(name));
}

void CorpusBuilder::set_articles(JournalIndex journal, int year, std::int64_t count) {
  if (journal >= corpus_.journals_.size()) throw DataError("journal index out of range");
  auto& j = corpus_.journals_[journal];
  if (count < 0) {
    throw DataError("negative article count for journal '" + j.id + "'");
  }
  if (!j.articles_by_year.emplace(year, count).second) {
    throw DataError("duplicate article count for journal '" + j.id + "' in year " +
                    std::to_string(year));
  }
}

void CorpusBuilder::add_citation(JournalIndex citing, JournalIndex cited, int citing_year,
                                 int cited_year, std::int64_t count) {
  const auto n = corpus_.journals_.size();
  if (citing >= n || cited >= n) throw DataError("journal index out of range");
  if (count < 1) throw DataError("citation count must be >= 1, got " + std::to_string(count));
  if (cited_year > citing_year) {
    throw DataError("cited year " + std::to_string(cited_year) + " is after citing year " +
                    std::to_string(citing_year));
  }
  corpus_.citations_.push_back({citing, cited, citing_year, cited_year, count});
}

void CorpusBuilder::add_citation(std::string_view citing, std::string_view cited,
                                 int citing_year, int cited_year, std::int64_t count) {
  auto from = corpus_.find(citing);
  if (!from) throw DataError("unknown journal id '" + std::string(citing) + "'");
  auto to = corpus_.find(cited);
  if (!to) throw DataError("unknown journal id '" + std::string(cited) + "'");
  add_citation(*from, *to, citing_year, cited_year, count);
}

Corpus CorpusBuilder::build() && {
  auto& records = corpus_.citations_;
  auto key = [](const CitationRecord& r) {
    return std::tie(r.citing, r.cited, r.citing_year, r.cited_year);
  };
  std::sort(records.begin(), records.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (out > 0 && key(records[out - 1]) == key(records[i])) {
      records[out - 1].count += records[i].count;
    } else {
      records[out++] = records[i];
    }
  }
  records.resize(out);
  records.shrink_to_fit();
  return std::move(corpus_);
}

namespace {

template <typename Int>
Int parse_int(const csv::Reader& reader, std::string_view text, const char* what) {
  Int value{};
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    reader.fail(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

void expect_header(csv::Reader& reader, const std::vector<std::string>& expected) {
  std::vector<std::string> fields;
  if (!reader.next(fields)) reader.fail("missing header row");
  if (fields != expected) {
    std::string want;
    for (const auto& f : expected) want += (want.empty() ? "" : ",") + f;
    reader.fail("expected header '" + want + "'");
  }
}

}  // namespace

Corpus parse_corpus(std::istream& journals, std::istream& citations,
                    const std::string& journals_source, const std::string& citations_source) {
  CorpusBuilder builder;
  std::vector<std::string> fields;

  csv::Reader jr(journals, journals_source);
  expect_header(jr, {"id", "name", "year", "articles"});
  while (jr.next(fields)) {
    if (fields.size() != 4) {
      jr.fail("expected 4 fields, got " + std::to_string(fields.size()));
    }
    try {
      const auto index = builder.declare_journal(fields[0], fields[1]);
      if (fields[2].empty() && fields[3].empty()) continue;
      const int year = parse_int<int>(jr, fields[2], "year");
      const auto count = parse_int<std::int64_t>(jr, fields[3], "article count");
      builder.set_articles(index, year, count);
    } catch (const ParseError&) {
      throw;
    } catch (const DataError& e) {
      jr.fail(e.what());
    }
  }

  csv::Reader cr(citations, citations_source);
  expect_header(cr, {"citing", "cited", "citing_year", "cited_year", "count"});
  while (cr.next(fields)) {
    if (fields.size() != 5) {
      cr.fail("expected 5 fields, got " + std::to_string(fields.size()));
    }
    const int citing_year = parse_int<int>(cr, fields[2], "citing year");
    const int cited_year = parse_int<int>(cr, fields[3], "cited year");
    const auto count = parse_int<std::int64_t>(cr, fields[4], "count");
    try {
      builder.add_citation(fields[0], fields[1], citing_year, cited_year, count);
    } catch (const DataError& e) {
      cr.fail(e.what());
    }
  }
  return std::move(builder).build();
}

void write_corpus(const Corpus& corpus, std::ostream& journals, std::ostream& citations) {
  journals << "id,name,year,articles\n";
  for (const auto& j : corpus.journals()) {
    const auto id = csv::escape(j.id);
    const auto name = csv::escape(j.name);
    if (j.articles_by_year.empty()) {
      journals << id << ',' << name << ",,\n";
      continue;
    }
    for (const auto& [year, count] : j.articles_by_year) {
      journals << id << ',' << name << ',' << year << ',' << count << '\n';
    }
  }

  std::vector<std::string> ids;
  ids.reserve(corpus.size());
  for (const auto& j : corpus.journals()) ids.push_back(csv::escape(j.id));

  citations << "citing,cited,citing_year,cited_year,count\n";
  for (const auto& r : corpus.citations()) {
    citations << ids[r.citing] << ',' << ids[r.cited] << ',' << r.citing_year << ','
              << r.cited_year << ',' << r.count << '\n';
  }
}

FilterResult filter_to_scored(const Corpus& corpus, const MetricVector& required) {
  FilterResult result;
  CorpusBuilder builder;
  std::vector<std::optional<JournalIndex>> remap(corpus.size());
  const auto journals = corpus.journals();
  for (std::size_t i = 0; i < journals.size(); ++i) {
    const auto& j = journals[i];
    if (!required.contains(j.id)) {
      result.removed.push_back(j.id);
      continue;
    }
    const auto index = builder.add_journal(j.id, j.name);
    for (const auto& [year, count] : j.articles_by_year) builder.set_articles(index, year, count);
    remap[i] = index;
  }
  for (const auto& r : corpus.citations()) {
    const auto from = remap[r.citing];
    const auto to = remap[r.cited];
    if (from && to) builder.add_citation(*from, *to, r.citing_year, r.cited_year, r.count);
  }
  result.corpus = std::move(builder).build();
  return result;
}

}  // namespace citerank
