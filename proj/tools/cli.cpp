#include "cli.hpp"

#include "oddgirth/drg_verify.hpp"
#include "oddgirth/errors.hpp"
#include "oddgirth/graph.hpp"
#include "oddgirth/report.hpp"
#include "oddgirth/scan.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace oddgirth::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> nonblank_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  if (format == "edges") return parse_edge_list(text);
  std::optional<std::string> only;
  for (const auto& line : nonblank_lines(text)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (only) throw std::runtime_error("'" + path + "' holds more than one graph6 line");
    only = line;
  }
  if (!only) throw std::runtime_error("'" + path + "' holds no graph");
  return parse_graph6(*only);
}

struct RunConfig {
  std::string input;
  std::string format = "graph6";
  std::optional<double> tol;
  std::optional<double> cluster_tol;
  bool json = false;

  std::string family;
  std::vector<int> params;
  std::string output;

  std::optional<int> order;
  std::string corpus;
  int jobs = 1;
  bool cross_checks = false;

  Tolerances tolerances() const {
    Tolerances t;
    if (tol) t.matrix = t.certificate = *tol;
    t.cluster = cluster_tol;
    return t;
  }
};

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg.input, cfg.format);
  const TheoremReport rep = verify_theorem(g, cfg.tolerances());
  if (cfg.json) out << report_to_json(rep, cfg.input).dump(2) << "\n";
  else out << report_to_text(rep, cfg.input);
  return rep.alarm() ? kExitAlarm : kExitOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const std::string line = encode_graph6(generate_family(cfg.family, cfg.params));
  if (cfg.output.empty() || cfg.output == "-") {
    out << line << "\n";
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw std::runtime_error("cannot write '" + cfg.output + "'");
    f << line << "\n";
  }
  return kExitOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  ScanOptions opts;
  opts.jobs = cfg.jobs;
  opts.tolerances = cfg.tolerances();
  opts.cross_checks = cfg.cross_checks;
  const ScanSummary summary =
      cfg.order ? scan_orders(*cfg.order, opts) : scan_corpus(nonblank_lines(read_input(cfg.corpus)), opts);
  if (cfg.json) out << summary_to_json(summary).dump(2) << "\n";
  else out << summary_to_text(summary);
  return summary.alarms == 0 ? kExitOk : kExitAlarm;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spectral verification of the odd-girth theorem for distance-regular graphs", "oddgirth"};
  app.require_subcommand(1);

  auto positive = CLI::PositiveNumber;

  auto* analyze = app.add_subcommand("analyze", "Run the full certificate pipeline on one graph");
  analyze->add_option("path", cfg.input, "Input file ('-' for stdin)")->required();
  analyze->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"graph6", "edges"}));
  analyze->add_option("--tol", cfg.tol, "Residual tolerance for matrix and certificate checks")->check(positive);
  analyze->add_option("--cluster-tol", cfg.cluster_tol, "Eigenvalue clustering tolerance")->check(positive);
  analyze->add_flag("--json", cfg.json, "Emit the JSON report");

  auto* generate = app.add_subcommand("generate", "Write a named graph family member as graph6");
  generate->add_option("family", cfg.family, "complete|cycle|path|petersen|odd|folded_cube|prism")->required();
  generate->add_option("params", cfg.params, "Integer parameters");
  generate->add_option("-o,--output", cfg.output, "Output file (default stdout)");

  auto* scan = app.add_subcommand("scan", "Search for counterexamples");
  auto* order_opt = scan->add_option("--n", cfg.order, "Enumerate connected graphs on 1..K vertices (K <= 7)")
                        ->check(CLI::Range(1, kMaxEnumerationOrder));
  auto* corpus_opt = scan->add_option("--corpus", cfg.corpus, "File with one graph6 per line");
  order_opt->excludes(corpus_opt);
  scan->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  scan->add_option("--tol", cfg.tol, "Residual tolerance for matrix and certificate checks")->check(positive);
  scan->add_option("--cluster-tol", cfg.cluster_tol, "Eigenvalue clustering tolerance")->check(positive);
  scan->add_flag("--cross-checks", cfg.cross_checks, "Also test the p_d(A)=A_d, excess and Lemma-1 properties");
  scan->add_flag("--json", cfg.json, "Emit the JSON summary");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
    if (scan->parsed() && !cfg.order && cfg.corpus.empty())
      throw CLI::RequiredError("scan requires --n or --corpus");
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (generate->parsed()) return cmd_generate(cfg, out);
    return cmd_scan(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace oddgirth::cli
