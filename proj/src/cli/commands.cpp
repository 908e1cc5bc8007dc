#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "citerank/cli.hpp"
#include "citerank/compare.hpp"
#include "citerank/corpus.hpp"
#include "citerank/eigenrank.hpp"
#include "citerank/errors.hpp"
#include "citerank/metrics.hpp"
#include "citerank/syngen.hpp"
#include "report.hpp"

namespace citerank::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

Corpus load_corpus(const std::string& journals_path, const std::string& citations_path) {
  auto journals = open_input(journals_path);
  auto citations = open_input(citations_path);
  return parse_corpus(journals, citations, journals_path, citations_path);
}

MetricVector load_metric(const std::string& path) {
  auto in = open_input(path);
  return read_metric_csv(in, path);
}

fs::path prepare_out(const std::string& dir) {
  fs::path out(dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

std::vector<std::size_t> parse_ks(const std::string& text) {
  std::vector<std::size_t> ks;
  for (const auto& part : split(text, ',')) {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), k);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || k == 0) {
      throw UsageError("--ks expects a comma-separated list of positive integers");
    }
    ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::pair<int, int> parse_years(const std::string& text) {
  const auto parts = split(text, ':');
  int a = 0, b = 0;
  auto parse = [](const std::string& s, int& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
  };
  if (parts.size() != 2 || !parse(parts[0], a) || !parse(parts[1], b)) {
    throw UsageError("--years expects A:B");
  }
  return {a, b};
}

struct MetricOptions {
  std::optional<int> window_span;
  std::optional<int> census_year;
  double alpha = 0.85;
  double tolerance = 1e-12;
  int max_iterations = 1000;
  bool include_self = false;
  bool exclude_self = false;
};

void add_metric_options(CLI::App* sub, MetricOptions& o) {
  sub->add_option("--window-span", o.window_span, "Publication years counted before the census year");
  sub->add_option("--census-year", o.census_year, "Census year (default: last year in the data)");
  sub->add_option("--alpha", o.alpha, "Damping factor")->capture_default_str();
  sub->add_option("--tol", o.tolerance, "L1 convergence tolerance")->capture_default_str();
  sub->add_option("--max-iter", o.max_iterations, "Power iteration limit")->capture_default_str();
  auto* inc = sub->add_flag("--include-self", o.include_self, "Count journal self-citations");
  auto* exc = sub->add_flag("--exclude-self", o.exclude_self, "Ignore journal self-citations");
  inc->excludes(exc);
}

int census_year_of(const Corpus& corpus, const MetricOptions& o) {
  if (o.census_year) return *o.census_year;
  const auto range = corpus.year_range();
  if (!range) throw PreconditionError("corpus has no dated records; pass --census-year");
  return range->second;
}

struct Computed {
  MetricVector metric;
  Json meta;
};

Computed compute_eigenfactor(const Corpus& corpus, const MetricOptions& o) {
  EigenSettings settings;
  settings.alpha = o.alpha;
  settings.tolerance = o.tolerance;
  settings.max_iterations = o.max_iterations;
  settings.exclude_self = !o.include_self;
  const auto window = CitationWindow::cited(census_year_of(corpus, o), o.window_span.value_or(5));
  auto result = eigenfactor(corpus, window, settings);
  Json meta = {{"window", window.describe()},
               {"census_year", window.census_year},
               {"window_span", window.span},
               {"alpha", settings.alpha},
               {"tolerance", settings.tolerance},
               {"max_iterations", settings.max_iterations},
               {"exclude_self", settings.exclude_self},
               {"iterations", result.iterations},
               {"residual", result.residual}};
  return {std::move(result.scores), std::move(meta)};
}

Computed compute_citations(const Corpus& corpus, const MetricOptions& o) {
  const auto window = o.window_span
                          ? CitationWindow::cited(census_year_of(corpus, o), *o.window_span)
                          : CitationWindow::all_years();
  const bool include_self = !o.exclude_self;
  auto metric = total_citations(corpus, window, include_self);
  Json meta = {{"window", window.describe()}, {"include_self", include_self}};
  return {std::move(metric), std::move(meta)};
}

Computed compute_impact_factor(const Corpus& corpus, const MetricOptions& o) {
  if (o.window_span) throw UsageError("--window-span does not apply to impact-factor (fixed at 2)");
  if (o.exclude_self) throw UsageError("impact-factor always counts self-citations");
  const int year = census_year_of(corpus, o);
  auto metric = impact_factor(corpus, year);
  Json meta = {{"census_year", year}, {"window", CitationWindow::cited(year, 2).describe()}};
  return {std::move(metric), std::move(meta)};
}

Computed compute(const Corpus& corpus, const std::string& method, const MetricOptions& o) {
  if (method == "eigenfactor") return compute_eigenfactor(corpus, o);
  if (method == "citations") return compute_citations(corpus, o);
  if (method == "impact-factor") return compute_impact_factor(corpus, o);
  throw UsageError("unknown method '" + method + "'");
}

Json metric_meta(const MetricVector& metric, Json settings) {
  return {{"tool_version", std::string(kToolVersion)},
          {"metric_name", metric.metric_name},
          {"provenance", metric.provenance},
          {"journals_scored", metric.size()},
          {"omitted", metric.omitted},
          {"settings", std::move(settings)}};
}

void write_metric(const fs::path& dir, const MetricVector& metric) {
  std::ostringstream os;
  write_metric_csv(os, metric);
  write_file(dir / (metric.metric_name + ".csv"), os.str());
}

void print_omissions(std::ostream& out, const MetricVector& metric) {
  if (metric.omitted.empty()) return;
  out << "omitted (" << metric.omitted.size() << "):";
  for (const auto& id : metric.omitted) out << ' ' << id;
  out << '\n';
}

// ---------------------------------------------------------------- commands

struct IngestArgs {
  std::string journals, citations, out, scored;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out) {
  auto corpus = load_corpus(a.journals, a.citations);
  Json summary = {{"tool_version", std::string(kToolVersion)},
                  {"sources", {{"journals", a.journals}, {"citations", a.citations}}}};
  if (!a.scored.empty()) {
    auto filtered = filter_to_scored(corpus, load_metric(a.scored));
    summary["filter"] = {{"scored_by", a.scored},
                         {"removed_count", filtered.removed.size()},
                         {"removed", filtered.removed}};
    out << "removed " << filtered.removed.size() << " journal(s) lacking a score\n";
    corpus = std::move(filtered.corpus);
  }
  summary["corpus"] = corpus_summary(corpus);

  const auto dir = prepare_out(a.out);
  std::ostringstream journals, citations;
  write_corpus(corpus, journals, citations);
  write_file(dir / "journals.csv", journals.str());
  write_file(dir / "citations.csv", citations.str());
  write_file(dir / "ingest.json", dump(summary));
  out << "ingested " << corpus.size() << " journals, " << corpus.citations().size()
      << " citation records (" << corpus.total_count() << " citations)\n";
  return 0;
}

struct RankArgs {
  std::string journals, citations, out, method, metric_file;
  MetricOptions metric;
  std::size_t top = 20;
  std::string tie_policy = "average";
  int precision = 6;
};

int cmd_rank(const RankArgs& a, std::ostream& out) {
  const auto policy = parse_tie_policy(a.tie_policy);
  std::optional<Corpus> corpus;
  Computed computed;
  if (!a.metric_file.empty()) {
    if (!a.method.empty() || !a.journals.empty() || !a.citations.empty()) {
      throw UsageError("--metric cannot be combined with --method or corpus files");
    }
    computed.metric = load_metric(a.metric_file);
    computed.meta = {{"source", a.metric_file}};
  } else {
    if (a.journals.empty() || a.citations.empty() || a.method.empty()) {
      throw UsageError("rank needs --journals, --citations and --method (or --metric)");
    }
    corpus = load_corpus(a.journals, a.citations);
    computed = compute(*corpus, a.method, a.metric);
  }
  const auto& metric = computed.metric;
  const auto table = rank(metric, policy);

  const auto dir = prepare_out(a.out);
  write_metric(dir, metric);
  std::ostringstream tsv;
  write_rank_tsv(tsv, table, a.precision);
  write_file(dir / (metric.metric_name + ".rank.tsv"), tsv.str());
  auto settings = computed.meta;
  settings["tie_policy"] = std::string(to_string(policy));
  write_file(dir / (metric.metric_name + ".json"), dump(metric_meta(metric, std::move(settings))));

  out << metric.metric_name;
  if (!metric.provenance.empty()) out << " (" << metric.provenance << ")";
  out << '\n' << format_rank_table(table, a.top, a.precision, corpus ? &*corpus : nullptr);
  print_omissions(out, metric);
  return 0;
}

struct CompareArgs {
  std::string metrics, out, ks = "1,5,10";
  double coverage = 0.95;
};

std::vector<std::string> unique_labels(const std::vector<std::string>& files) {
  std::vector<std::string> labels;
  for (const auto& f : files) labels.push_back(fs::path(f).stem().string());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::count(labels.begin(), labels.end(), labels[i]) > 1) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        if (j != i && labels[j] == labels[i]) labels[j] += "_" + std::to_string(j + 1);
      }
      labels[i] += "_" + std::to_string(i + 1);
    }
  }
  return labels;
}

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const auto files = split(a.metrics, ',');
  if (files.size() < 2 || files.size() > 3) throw UsageError("--metrics takes two or three files");
  const auto ks = parse_ks(a.ks);
  std::vector<MetricVector> metrics;
  for (const auto& f : files) metrics.push_back(load_metric(f));
  const auto labels = unique_labels(files);

  struct Pair {
    std::string label;
    ComparisonReport report;
    std::vector<LogPoint> scatter;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    for (std::size_t j = i + 1; j < metrics.size(); ++j) {
      pairs.push_back({labels[i] + "_vs_" + labels[j],
                       compare_metrics(metrics[i], metrics[j], a.coverage, ks),
                       log_pairs(metrics[i], metrics[j])});
    }
  }

  const auto dir = prepare_out(a.out);
  for (const auto& p : pairs) {
    auto json = to_json(p.report, p.scatter);
    json["tool_version"] = std::string(kToolVersion);
    write_file(dir / ("compare_" + p.label + ".json"), dump(json));
    std::ostringstream tsv;
    write_scatter_tsv(tsv, p.scatter);
    write_file(dir / ("scatter_" + p.label + ".tsv"), tsv.str());
    out << fmt::format("{}: pearson_log rho={:.6f} (n={}), spearman rho={:.6f} (n={})\n", p.label,
                       p.report.pearson_log.rho, p.report.pearson_log.n, p.report.spearman.rho,
                       p.report.spearman.n);
  }
  return 0;
}

struct ConcentrationArgs {
  std::string metric_file, out, ks = "1,5,10";
};

int cmd_concentration(const ConcentrationArgs& a, std::ostream& out) {
  const auto metric = load_metric(a.metric_file);
  const auto shares = concentration(metric, parse_ks(a.ks));
  for (const auto& s : shares) out << fmt::format("top {}: {:.6f}\n", s.k, s.share);
  if (!a.out.empty()) {
    const auto dir = prepare_out(a.out);
    Json json = {{"tool_version", std::string(kToolVersion)},
                 {"metric_name", metric.metric_name},
                 {"journals", metric.size()},
                 {"shares", to_json(shares)}};
    write_file(dir / (metric.metric_name + ".concentration.json"), dump(json));
  }
  return 0;
}

struct GenArgs {
  int journals = 50;
  std::string years = "2002:2006";
  double skew = 1.0;
  double mean_out = 10.0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GenSettings s;
  s.n_journals = a.journals;
  std::tie(s.first_year, s.last_year) = parse_years(a.years);
  s.skew_exponent = a.skew;
  s.mean_out_citations = a.mean_out;
  s.seed = a.seed;
  s.validate();
  const auto corpus = generate(s);

  const auto dir = prepare_out(a.out);
  std::ostringstream journals, citations;
  write_corpus(corpus, journals, citations);
  write_file(dir / "journals.csv", journals.str());
  write_file(dir / "citations.csv", citations.str());
  out << "generated " << corpus.size() << " journals, " << corpus.citations().size()
      << " citation records (" << corpus.total_count() << " citations)\n";
  return 0;
}

struct ReportArgs {
  std::string journals, citations, out, ks = "1,5,10";
  MetricOptions metric;
  std::size_t top = 20;
  std::string tie_policy = "average";
  int precision = 6;
  double coverage = 0.95;
};

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const auto policy = parse_tie_policy(a.tie_policy);
  const auto ks = parse_ks(a.ks);
  const auto corpus = load_corpus(a.journals, a.citations);

  MetricOptions citation_options = a.metric;
  citation_options.window_span.reset();
  citation_options.include_self = false;
  citation_options.exclude_self = false;
  MetricOptions if_options = citation_options;

  const std::vector<Computed> computed{compute_eigenfactor(corpus, a.metric),
                                       compute_citations(corpus, citation_options),
                                       compute_impact_factor(corpus, if_options)};
  std::vector<RankTable> tables;
  for (const auto& c : computed) tables.push_back(rank(c.metric, policy));

  Json comparisons = Json::object();
  std::vector<std::pair<std::string, std::vector<LogPoint>>> scatters;
  for (std::size_t j = 1; j < computed.size(); ++j) {
    const auto& x = computed[0].metric;
    const auto& y = computed[j].metric;
    const auto label = x.metric_name + "_vs_" + y.metric_name;
    auto points = log_pairs(x, y);
    comparisons[label] = to_json(compare_metrics(x, y, a.coverage, ks), points);
    scatters.emplace_back(label, std::move(points));
  }

  Json metrics_meta = Json::object();
  Json table_json = Json::array();
  for (std::size_t i = 0; i < computed.size(); ++i) {
    metrics_meta[computed[i].metric.metric_name] = {{"provenance", computed[i].metric.provenance},
                                                    {"omitted", computed[i].metric.omitted},
                                                    {"settings", computed[i].meta}};
    table_json.push_back(to_json(tables[i]));
  }
  Json bundle = {
      {"metadata",
       {{"tool_version", std::string(kToolVersion)},
        {"corpus", corpus_summary(corpus)},
        {"metrics", std::move(metrics_meta)},
        {"tie_policy", std::string(to_string(policy))},
        {"coverage", a.coverage},
        {"ks", ks},
        {"concentration_basis", "computed over every journal in the supplied corpus"}}},
      {"tables", std::move(table_json)},
      {"comparisons", std::move(comparisons)}};

  const auto dir = prepare_out(a.out);
  for (std::size_t i = 0; i < computed.size(); ++i) {
    write_metric(dir, computed[i].metric);
    std::ostringstream tsv;
    write_rank_tsv(tsv, tables[i], a.precision);
    write_file(dir / (computed[i].metric.metric_name + ".rank.tsv"), tsv.str());
  }
  for (const auto& [label, points] : scatters) {
    std::ostringstream tsv;
    write_scatter_tsv(tsv, points);
    write_file(dir / ("scatter_" + label + ".tsv"), tsv.str());
  }
  const auto table_text = format_comparison_table(tables, a.top, a.precision, &corpus);
  write_file(dir / "table.txt", table_text);
  write_file(dir / "report.json", dump(bundle));

  out << table_text;
  for (const auto& [label, json] : bundle["comparisons"].items()) {
    out << fmt::format("{}: pearson_log rho={:.6f} (n={}), spearman rho={:.6f} (n={})\n", label,
                       json["pearson_log"]["rho"].get<double>(),
                       json["pearson_log"]["n"].get<std::size_t>(),
                       json["spearman"]["rho"].get<double>(),
                       json["spearman"]["n"].get<std::size_t>());
  }
  print_omissions(out, computed[2].metric);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Journal citation-network ranking toolkit", "citerank"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate and canonicalize corpus files");
  ingest_cmd->add_option("--journals", ingest.journals, "Journals file")->required();
  ingest_cmd->add_option("--citations", ingest.citations, "Citations file")->required();
  ingest_cmd->add_option("--out", ingest.out, "Output directory")->required();
  ingest_cmd->add_option("--scored", ingest.scored, "Keep only journals present in this metric file");

  RankArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank", "Score and rank journals");
  rank_cmd->add_option("--journals", rank_args.journals, "Journals file");
  rank_cmd->add_option("--citations", rank_args.citations, "Citations file");
  rank_cmd->add_option("--out", rank_args.out, "Output directory")->required();
  rank_cmd->add_option("--method", rank_args.method, "eigenfactor, citations or impact-factor")
      ->check(CLI::IsMember({"eigenfactor", "citations", "impact-factor"}));
  rank_cmd->add_option("--metric", rank_args.metric_file, "Rank an existing metric file instead");
  add_metric_options(rank_cmd, rank_args.metric);
  rank_cmd->add_option("--top", rank_args.top, "Rows to print (0 = all)")->capture_default_str();
  rank_cmd->add_option("--tie-policy", rank_args.tie_policy, "average or min")->capture_default_str();
  rank_cmd->add_option("--precision", rank_args.precision, "Significant digits in tables")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "Correlate two or three metric files");
  compare_cmd->add_option("--metrics", compare_args.metrics, "file,file[,file]")->required();
  compare_cmd->add_option("--coverage", compare_args.coverage, "Ellipse probability coverage")
      ->capture_default_str();
  compare_cmd->add_option("--ks", compare_args.ks, "Concentration cut-offs")->capture_default_str();
  compare_cmd->add_option("--out", compare_args.out, "Output directory")->required();

  ConcentrationArgs conc_args;
  auto* conc_cmd = app.add_subcommand("concentration", "Top-k share of a metric");
  conc_cmd->add_option("--metric", conc_args.metric_file, "Metric file")->required();
  conc_cmd->add_option("--ks", conc_args.ks, "Concentration cut-offs")->capture_default_str();
  conc_cmd->add_option("--out", conc_args.out, "Output directory");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  gen_cmd->add_option("--journals", gen_args.journals, "Number of journals")->capture_default_str();
  gen_cmd->add_option("--years", gen_args.years, "Inclusive year range A:B")->capture_default_str();
  gen_cmd->add_option("--skew", gen_args.skew, "Attractiveness tail exponent")->capture_default_str();
  gen_cmd->add_option("--mean-out", gen_args.mean_out, "Mean citations made per journal-year")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_args.out, "Output directory")->required();

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand("report", "Full comparison report for a corpus");
  report_cmd->add_option("--journals", report_args.journals, "Journals file")->required();
  report_cmd->add_option("--citations", report_args.citations, "Citations file")->required();
  report_cmd->add_option("--out", report_args.out, "Output directory")->required();
  add_metric_options(report_cmd, report_args.metric);
  report_cmd->add_option("--top", report_args.top, "Rows to print (0 = all)")->capture_default_str();
  report_cmd->add_option("--tie-policy", report_args.tie_policy, "average or min")->capture_default_str();
  report_cmd->add_option("--precision", report_args.precision, "Significant digits in tables")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  report_cmd->add_option("--coverage", report_args.coverage, "Ellipse probability coverage")
      ->capture_default_str();
  report_cmd->add_option("--ks", report_args.ks, "Concentration cut-offs")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ingest_cmd->parsed()) return cmd_ingest(ingest, out);
    if (rank_cmd->parsed()) return cmd_rank(rank_args, out);
    if (compare_cmd->parsed()) return cmd_compare(compare_args, out);
    if (conc_cmd->parsed()) return cmd_concentration(conc_args, out);
    if (gen_cmd->parsed()) return cmd_gen(gen_args, out);
    if (report_cmd->parsed()) return cmd_report(report_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace citerank::cli
