#pragma once

// Minimal comma-separated reader/writer with standard double-quote rules:
// a field may be wrapped in quotes, embedded quotes are doubled, and quoted
// fields may span lines. A quote inside an unquoted field is an error.

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace citerank::csv {

class Reader {
 public:
  Reader(std::istream& in, std::string source);

  /// Reads the next record into `fields`. Returns false at end of input.
  /// Blank lines are skipped. Throws ParseError on malformed quoting.
  bool next(std::vector<std::string>& fields);

  /// Line number where the most recently returned record started.
  std::size_t line() const noexcept { return record_line_; }
  const std::string& source() const noexcept { return source_; }

  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::istream& in_;
  std::string source_;
  std::string buffer_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

/// Quotes `field` if it contains a delimiter, quote, or line break.
std::string escape(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace citerank::csv
