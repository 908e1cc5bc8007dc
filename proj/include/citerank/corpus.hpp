#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "citerank/metric_vector.hpp"

namespace citerank {

/// Position of a journal inside its owning Corpus.
using JournalIndex = std::uint32_t;

struct Journal {
  std::string id;
  std::string name;
  /// Years absent from the map have zero articles.
  std::map<int, std::int64_t> articles_by_year;

  std::int64_t articles_in(int year) const;
  /// Sum of article counts over the inclusive range [first, last].
  std::int64_t articles_between(int first, int last) const;
  std::int64_t articles_total() const;

  bool operator==(const Journal&) const = default;
};

/// Aggregated citations from one journal to another, for one (citing year,
/// cited publication year) pair.
struct CitationRecord {
  JournalIndex citing = 0;
  JournalIndex cited = 0;
  int citing_year = 0;
  int cited_year = 0;
  std::int64_t count = 0;

  bool self() const noexcept { return citing == cited; }
  bool operator==(const CitationRecord&) const = default;
};

enum class WindowMode { cited_window, all_years };

/// Which citation records a metric counts. In cited-window mode only
/// citations made in `census_year` to items published in
/// [census_year - span, census_year - 1] are included.
struct CitationWindow {
  WindowMode mode = WindowMode::all_years;
  int census_year = 0;
  int span = 0;

  static CitationWindow all_years() { return {}; }
  /// Throws PreconditionError if span < 1.
  static CitationWindow cited(int census_year, int span);

  bool contains(const CitationRecord& record) const noexcept;
  bool covers_publication_year(int year) const noexcept;
  std::string describe() const;
};

/// Journals plus merged citation records. Immutable once built; records are
/// kept sorted by (citing, cited, citing_year, cited_year) with unique keys.
class Corpus {
 public:
  Corpus() = default;

  std::span<const Journal> journals() const noexcept { return journals_; }
  std::span<const CitationRecord> citations() const noexcept { return citations_; }
  std::size_t size() const noexcept { return journals_.size(); }
  bool empty() const noexcept { return journals_.empty(); }

  const Journal& journal(JournalIndex index) const { return journals_.at(index); }
  std::optional<JournalIndex> find(std::string_view id) const;

  std::int64_t total_count() const noexcept;

  /// Smallest and largest year mentioned by article counts or citation
  /// records. Empty when the corpus holds no dated data.
  std::optional<std::pair<int, int>> year_range() const;

  bool operator==(const Corpus& other) const {
    return journals_ == other.journals_ && citations_ == other.citations_;
  }

 private:
  friend class CorpusBuilder;

  struct IdHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<Journal> journals_;
  std::vector<CitationRecord> citations_;
  std::unordered_map<std::string, JournalIndex, IdHash, std::equal_to<>> index_;
};

/// Accumulates journals and raw citation rows, validating each as it
/// arrives; build() merges duplicate citation keys by summing counts.
/// Errors are thrown as DataError.
class CorpusBuilder {
 public:
  CorpusBuilder() = default;

  JournalIndex add_journal(std::string id, std::string name);
  /// Adds the journal or, if `id` already exists with the same name, returns it.
  JournalIndex declare_journal(std::string_view id, std::string_view name);
  std::optional<JournalIndex> find(std::string_view id) const { return corpus_.find(id); }
  std::size_t journal_count() const noexcept { return corpus_.journals_.size(); }

  void set_articles(JournalIndex journal, int year, std::int64_t count);

  void add_citation(JournalIndex citing, JournalIndex cited, int citing_year, int cited_year,
                    std::int64_t count);
  void add_citation(std::string_view citing, std::string_view cited, int citing_year,
                    int cited_year, std::int64_t count);

  void reserve_citations(std::size_t n) { corpus_.citations_.reserve(n); }

  Corpus build() &&;

 private:
  Corpus corpus_;
};

// Journals file: `id,name,year,articles`, one row per (journal, year). A row
// with empty year and articles declares a journal that has no counts.
// Citations file: `citing,cited,citing_year,cited_year,count`.
Corpus parse_corpus(std::istream& journals, std::istream& citations,
                    const std::string& journals_source = "journals",
                    const std::string& citations_source = "citations");

void write_corpus(const Corpus& corpus, std::ostream& journals, std::ostream& citations);

struct FilterResult {
  Corpus corpus;
  std::vector<std::string> removed;
};

/// Keeps only journals scored by `required`, dropping every citation that
/// touches a removed journal. Journal order is preserved.
FilterResult filter_to_scored(const Corpus& corpus, const MetricVector& required);

}  // namespace citerank
