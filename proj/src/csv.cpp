#include "citerank/csv.hpp"

#include "citerank/errors.hpp"

namespace citerank::csv {

Reader::Reader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

void Reader::fail(const std::string& message) const {
  throw ParseError(source_, record_line_, message);
}

bool Reader::next(std::vector<std::string>& fields) {
  fields.clear();
  do {
    if (!std::getline(in_, buffer_)) return false;
    ++line_;
    if (line_ == 1 && buffer_.starts_with("\xEF\xBB\xBF")) buffer_.erase(0, 3);
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
  } while (buffer_.empty());
  record_line_ = line_;

  std::string field;
  std::size_t pos = 0;
  for (;;) {
    field.clear();
    if (pos < buffer_.size() && buffer_[pos] == '"') {
      ++pos;
      for (;;) {
        if (pos == buffer_.size()) {
          // Quoted field continues on the next physical line.
          std::string more;
          if (!std::getline(in_, more)) fail("unterminated quoted field");
          ++line_;
          if (!more.empty() && more.back() == '\r') more.pop_back();
          field.push_back('\n');
          buffer_ = std::move(more);
          pos = 0;
          continue;
        }
        const char c = buffer_[pos++];
        if (c != '"') {
          field.push_back(c);
        } else if (pos < buffer_.size() && buffer_[pos] == '"') {
          field.push_back('"');
          ++pos;
        } else {
          break;
        }
      }
      if (pos < buffer_.size() && buffer_[pos] != ',') {
        fail("unexpected character after closing quote");
      }
    } else {
      const std::size_t end = buffer_.find(',', pos);
      const std::size_t stop = end == std::string::npos ? buffer_.size() : end;
      std::string_view raw(buffer_.data() + pos, stop - pos);
      if (raw.find('"') != std::string_view::npos) fail("unescaped quote in unquoted field");
      field.assign(raw);
      pos = stop;
    }
    fields.push_back(field);
    if (pos >= buffer_.size()) break;
    ++pos;  // skip ','
    if (pos == buffer_.size()) {
      fields.emplace_back();
      break;
    }
  }
  return true;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace citerank::csv
