#include "report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>

#include "citerank/errors.hpp"

namespace citerank::cli {

namespace {

std::string shortest(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string display_name(const std::string& id, const Corpus* corpus) {
  if (!corpus) return id;
  if (auto index = corpus->find(id)) {
    const auto& name = corpus->journal(*index).name;
    if (!name.empty()) return name;
  }
  return id;
}

std::string render(const std::vector<std::vector<std::string>>& cells,
                   const std::vector<bool>& right_align) {
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += right_align[c] ? fmt::format("{:>{}}", row[c], width[c])
                             : fmt::format("{:<{}}", row[c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_number(double value, int precision) {
  return fmt::format("{:.{}g}", value, precision);
}

Json to_json(const RankTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) rows.push_back({{"id", r.id}, {"score", r.score}, {"rank", r.rank}});
  return {{"metric_name", table.metric_name},
          {"tie_policy", std::string(to_string(table.tie_policy))},
          {"rows", std::move(rows)}};
}

Json to_json(const Correlation& c) {
  return {{"rho", c.rho}, {"n", c.n}, {"omitted", c.omitted}};
}

Json to_json(const EllipseParams& e) {
  return {{"center", {e.center_x, e.center_y}},
          {"semi_axes", {e.major, e.minor}},
          {"orientation_radians", e.orientation},
          {"coverage", e.coverage},
          {"degenerate", e.degenerate},
          {"space", "log10"}};
}

Json to_json(const std::vector<ConcentrationShare>& shares) {
  Json out = Json::array();
  for (const auto& s : shares) out.push_back({{"k", s.k}, {"share", s.share}});
  return out;
}

Json to_json(const ComparisonReport& r, const std::vector<LogPoint>& scatter) {
  Json points = Json::array();
  for (const auto& p : scatter) points.push_back({p.id, p.log_x, p.log_y});
  return {{"x_metric", r.x_metric},
          {"y_metric", r.y_metric},
          {"pearson_log", to_json(r.pearson_log)},
          {"spearman", to_json(r.spearman)},
          {"concentration", {{"x", to_json(r.concentration_x)}, {"y", to_json(r.concentration_y)}}},
          {"rank_gaps", {{"x", r.rank_gaps_x}, {"y", r.rank_gaps_y}}},
          {"ellipse", to_json(r.ellipse)},
          {"scatter", std::move(points)}};
}

Json corpus_summary(const Corpus& corpus) {
  Json out = {{"journals", corpus.size()},
              {"citation_records", corpus.citations().size()},
              {"total_citations", corpus.total_count()}};
  if (auto range = corpus.year_range()) {
    out["year_range"] = {range->first, range->second};
  } else {
    out["year_range"] = nullptr;
  }
  return out;
}

std::string format_rank_table(const RankTable& table, std::size_t top, int precision,
                              const Corpus* corpus) {
  std::vector<std::vector<std::string>> cells{{"rank", "journal", table.metric_name}};
  const auto limit = top == 0 ? table.rows.size() : std::min(top, table.rows.size());
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& r = table.rows[i];
    cells.push_back({fmt::format("{:g}", r.rank), display_name(r.id, corpus),
                     format_number(r.score, precision)});
  }
  return render(cells, {true, false, true});
}

std::string format_comparison_table(const std::vector<RankTable>& tables, std::size_t top,
                                    int precision, const Corpus* corpus) {
  if (tables.empty()) return {};
  std::vector<std::string> header{"journal"};
  for (const auto& t : tables) header.push_back(t.metric_name);
  for (const auto& t : tables) header.push_back(t.metric_name + " rank");
  std::vector<std::vector<std::string>> cells{header};

  std::vector<std::map<std::string, const RankRow*, std::less<>>> lookup(tables.size());
  for (std::size_t t = 0; t < tables.size(); ++t) {
    for (const auto& r : tables[t].rows) lookup[t].emplace(r.id, &r);
  }

  const auto& lead = tables.front().rows;
  const auto limit = top == 0 ? lead.size() : std::min(top, lead.size());
  for (std::size_t i = 0; i < limit; ++i) {
    std::vector<std::string> row{display_name(lead[i].id, corpus)};
    std::vector<std::string> ranks;
    for (std::size_t t = 0; t < tables.size(); ++t) {
      auto it = lookup[t].find(lead[i].id);
      if (it == lookup[t].end()) {
        row.emplace_back("-");
        ranks.emplace_back("-");
      } else {
        row.push_back(format_number(it->second->score, precision));
        ranks.push_back(fmt::format("{:g}", it->second->rank));
      }
    }
    row.insert(row.end(), ranks.begin(), ranks.end());
    cells.push_back(std::move(row));
  }
  std::vector<bool> align(header.size(), true);
  align[0] = false;
  return render(cells, align);
}

void write_rank_tsv(std::ostream& out, const RankTable& table, int precision) {
  out << "rank\tid\t" << table.metric_name << '\n';
  for (const auto& r : table.rows) {
    out << fmt::format("{:g}", r.rank) << '\t' << r.id << '\t' << format_number(r.score, precision)
        << '\n';
  }
}

void write_scatter_tsv(std::ostream& out, const std::vector<LogPoint>& points) {
  out << "id\tlog10_x\tlog10_y\n";
  for (const auto& p : points) {
    out << p.id << '\t' << shortest(p.log_x) << '\t' << shortest(p.log_y) << '\n';
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace citerank::cli
