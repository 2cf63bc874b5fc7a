#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flatband/builtins.hpp"
#include "flatband/report.hpp"

using namespace flatband;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitEngine = 3;
constexpr int kExitVerify = 4;

struct SourceOptions {
  std::string builtin;
  std::string file;
};

struct CommonOptions {
  SourceOptions src;
  std::string json_path;
  int stage_bound_raw = -1;
  int threads = 1;

  std::optional<int> stage_bound() const {
    return stage_bound_raw > 0 ? std::optional<int>(stage_bound_raw) : std::nullopt;
  }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  auto* b = cmd->add_option("--builtin", o.src.builtin,
                            "built-in lattice (kagome, square, cycle, comb2)");
  auto* f = cmd->add_option("--file", o.src.file, "graph description file");
  b->excludes(f);
  f->excludes(b);
  cmd->add_option("--json", o.json_path, "write the machine-readable report here");
  cmd->add_option("--stage-bound", o.stage_bound_raw,
                  "free-resolution stage safety bound (default: dim + 3)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "per-band parallelism (default 1)")
      ->check(CLI::PositiveNumber);
}

std::string load_source_text(const SourceOptions& src, std::string* name) {
  if (!src.builtin.empty()) {
    *name = "builtin:" + src.builtin;
    return builtin_graph_text(src.builtin);
  }
  if (src.file.empty())
    throw std::invalid_argument("one of --builtin or --file is required");
  std::ifstream in(src.file);
  if (!in) throw std::invalid_argument("cannot open graph file '" + src.file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  *name = src.file;
  return ss.str();
}

// Re-emit a parsed graph as a document with the last edge offset bumped; the
// result still goes through the public parser.
std::string corrupted_graph_text(const QuotientGraph& g) {
  std::ostringstream out;
  out << "dim " << g.dim() << "\nvertices";
  for (const auto& lab : g.vertex_labels()) out << " " << lab;
  out << "\n";
  const auto& edges = g.edges();
  for (size_t e = 0; e < edges.size(); ++e) {
    out << "edge " << g.vertex_labels()[static_cast<size_t>(edges[e].i)] << " "
        << g.vertex_labels()[static_cast<size_t>(edges[e].j)];
    IntVec off = edges[e].offset;
    if (e + 1 == edges.size()) off[0] += 1;  // the deliberate corruption
    for (int32_t x : off) out << " " << x;
    out << "\n";
  }
  return out.str();
}

void emit(const AnalysisReport& report, const CommonOptions& o) {
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + o.json_path + "'");
    out << render_json(report);
  }
  std::cout << render_text(report);
}

int run(int argc, char** argv) {
  CLI::App app{"exact flat-band analysis of Z^d-periodic graphs"};
  app.require_subcommand(1);

  CommonOptions aopt, topt, vopt;
  int jmax_t = 4, jmax_v = 4;
  std::optional<int> thickness_t, thickness_v;
  bool corrupt = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "find flat bands, kernel generators and exact densities");
  add_common(analyze, aopt);

  CLI::App* truncate = app.add_subcommand(
      "truncate", "finite Folner truncation counts with rigorous error bounds");
  add_common(truncate, topt);
  truncate->add_option("--jmax", jmax_t, "largest Folner radius (default 4)")
      ->check(CLI::PositiveNumber);
  int thick_t_raw = -1;
  truncate->add_option("--thickness", thick_t_raw,
                       "boundary thickness j0 (default: generator support width)")
      ->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand(
      "verify", "run analysis + truncation and assert every error bound");
  add_common(verify, vopt);
  verify->add_option("--jmax", jmax_v, "largest Folner radius (default 4)")
      ->check(CLI::PositiveNumber);
  int thick_v_raw = -1;
  verify->add_option("--thickness", thick_v_raw,
                     "boundary thickness j0 (default: generator support width)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--self-test-corrupt", corrupt,
                   "negative control: flip one edge offset and expect a failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (thick_t_raw > 0) thickness_t = thick_t_raw;
  if (thick_v_raw > 0) thickness_v = thick_v_raw;

  if (analyze->parsed()) {
    std::string name;
    QuotientGraph g = QuotientGraph::parse(load_source_text(aopt.src, &name));
    AnalyzeOptions ao{aopt.stage_bound(), aopt.threads};
    AnalysisReport report = analyze_graph(g, name, ao);
    emit(report, aopt);
    return kExitOk;
  }

  if (truncate->parsed()) {
    std::string name;
    QuotientGraph g = QuotientGraph::parse(load_source_text(topt.src, &name));
    AnalyzeOptions ao{topt.stage_bound(), topt.threads};
    AnalysisReport report = analyze_graph(g, name, ao);
    if (!report.bands.empty()) attach_truncation(report, jmax_t, thickness_t);
    emit(report, topt);
    return kExitOk;
  }

  // verify
  std::string name;
  std::string text = load_source_text(vopt.src, &name);
  QuotientGraph g = QuotientGraph::parse(text);
  AnalyzeOptions ao{vopt.stage_bound(), vopt.threads};
  AnalysisReport pristine = analyze_graph(g, name, ao);

  AnalysisReport* checked = &pristine;
  AnalysisReport corrupted_report;
  std::vector<std::string> violations;
  if (corrupt) {
    QuotientGraph cg = QuotientGraph::parse(corrupted_graph_text(g));
    corrupted_report = analyze_graph(cg, name + " (corrupted)", ao);
    checked = &corrupted_report;
    auto render_bands = [](const AnalysisReport& r) {
      std::string s;
      for (const auto& br : r.bands) s += br.band.minpoly_mu.to_string("mu") + "; ";
      return s.empty() ? std::string("<none>") : s;
    };
    std::string before = render_bands(pristine);
    std::string after = render_bands(corrupted_report);
    if (before != after)
      violations.push_back("corrupted graph changed the flat-band set: {" + before +
                           "} vs {" + after + "}");
  }
  if (!checked->bands.empty()) attach_truncation(*checked, jmax_v, thickness_v);
  for (const auto& v : verify_report(*checked)) violations.push_back(v);

  emit(*checked, vopt);
  if (!violations.empty()) {
    std::cout << "\nVERIFY FAIL\n";
    for (const auto& v : violations) std::cout << "  " << v << "\n";
    return kExitVerify;
  }
  std::cout << "\nVERIFY PASS";
  if (!checked->bands.empty())
    std::cout << " (" << checked->bands.size() << " band(s), all bounds hold)";
  else
    std::cout << " (no flat bands; vacuous)";
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, [](int) { flatband::cancel::request(); });
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
              << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CancelledError&) {
    std::cerr << "cancelled\n";
    return kExitEngine;
  } catch (const EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kExitEngine;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEngine;
  }
}
