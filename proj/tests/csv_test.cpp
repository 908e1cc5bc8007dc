#include <gtest/gtest.h>

#include <sstream>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

using citerank::ParseError;
using citerank::csv::Reader;

namespace {

std::vector<std::vector<std::string>> read_all(const std::string& text) {
  std::istringstream in(text);
  Reader reader(in, "test");
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> fields;
  while (reader.next(fields)) rows.push_back(fields);
  return rows;
}

}  // namespace

TEST(Csv, SplitsPlainAndEmptyFields) {
  const auto rows = read_all("a,b,c\n,x,\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"", "x", ""}));
}

TEST(Csv, QuotedFieldsKeepDelimitersQuotesAndNewlines) {
  const auto rows = read_all("\"a,b\",\"say \"\"hi\"\"\",\"two\nlines\"\r\nnext,row\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a,b", "say \"hi\"", "two\nlines"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"next", "row"}));
}

TEST(Csv, SkipsBlankLinesAndBom) {
  const auto rows = read_all("\xEF\xBB\xBFid\n\n\nx\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "id");
}

TEST(Csv, RejectsBadQuoting) {
  EXPECT_THROW(read_all("a\"b,c\n"), ParseError);
  EXPECT_THROW(read_all("\"ab\"c,d\n"), ParseError);
  EXPECT_THROW(read_all("\"never closed\n"), ParseError);
}

TEST(Csv, ErrorReportsRecordLine) {
  try {
    read_all("ok\nfine\nbad\"quote\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.source(), "test");
  }
}

TEST(Csv, EscapeRoundTrips) {
  const std::vector<std::string> fields{"plain", "with,comma", "q\"uote", "multi\nline", ""};
  std::ostringstream out;
  citerank::csv::write_row(out, fields);
  const auto rows = read_all(out.str());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], fields);
}
