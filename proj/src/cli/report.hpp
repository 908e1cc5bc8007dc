#pragma once

#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "citerank/compare.hpp"
#include "citerank/corpus.hpp"
#include "citerank/metric_vector.hpp"

namespace citerank::cli {

using Json = nlohmann::json;

Json to_json(const RankTable& table);
Json to_json(const Correlation& correlation);
Json to_json(const EllipseParams& ellipse);
Json to_json(const std::vector<ConcentrationShare>& shares);
Json to_json(const ComparisonReport& report, const std::vector<LogPoint>& scatter);
Json corpus_summary(const Corpus& corpus);

std::string format_number(double value, int precision);

/// Top `top` rows (all when 0) as an aligned text table. Journal names are
/// looked up in `corpus` when given.
std::string format_rank_table(const RankTable& table, std::size_t top, int precision,
                              const Corpus* corpus = nullptr);

/// Side-by-side table of three metrics ordered by the first, with each
/// metric's rank. Missing values print as "-".
std::string format_comparison_table(const std::vector<RankTable>& tables, std::size_t top,
                                    int precision, const Corpus* corpus = nullptr);

void write_rank_tsv(std::ostream& out, const RankTable& table, int precision);
void write_scatter_tsv(std::ostream& out, const std::vector<LogPoint>& points);

/// Writes `text` to `path`, throwing Error on I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);
std::string dump(const Json& json);

}  // namespace citerank::cli
