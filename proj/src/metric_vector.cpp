#include "citerank/metric_vector.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

void validate(const MetricVector& metric) {
  for (const auto& [id, score] : metric.scores) {
    if (!std::isfinite(score) || score < 0.0) {
      throw DataError("metric '" + metric.metric_name + "' has invalid score for '" + id + "'");
    }
  }
}

MetricVector read_metric_csv(std::istream& in, const std::string& source) {
  csv::Reader reader(in, source);
  std::vector<std::string> fields;
  if (!reader.next(fields)) reader.fail("missing header row");
  if (fields.size() != 2 || fields[0] != "id" || fields[1].empty()) {
    reader.fail("expected header 'id,<metric name>'");
  }
  MetricVector metric;
  metric.metric_name = fields[1];
  while (reader.next(fields)) {
    if (fields.size() != 2) reader.fail("expected 2 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) reader.fail("empty journal id");
    double score = 0.0;
    const auto& text = fields[1];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), score);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
      reader.fail("invalid score '" + text + "'");
    }
    if (!std::isfinite(score) || score < 0.0) reader.fail("score must be finite and >= 0");
    if (!metric.scores.emplace(fields[0], score).second) {
      reader.fail("duplicate journal id '" + fields[0] + "'");
    }
  }
  return metric;
}

void write_metric_csv(std::ostream& out, const MetricVector& metric) {
  csv::write_row(out, {"id", metric.metric_name});
  std::array<char, 32> buf{};
  for (const auto& [id, score] : metric.scores) {
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), score);
    out << csv::escape(id) << ',' << std::string_view(buf.data(), ptr - buf.data()) << '\n';
  }
}

}  // namespace citerank
