#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatband/bloch.hpp"
#include "flatband/resolution.hpp"
#include "flatband/truncation.hpp"

namespace flatband {

struct BandReport {
  FlatBand band;
  DensityResult density;
  std::vector<EigenfunctionTable> generator_tables;
};

struct AnalysisReport {
  std::string source;
  QuotientGraph graph;
  std::vector<BandReport> bands;

  bool has_truncation = false;
  int thickness = 0;  // j0 used for the truncation block
  std::vector<std::vector<TruncationRow>> truncation;  // parallel to bands

  // timings appear only in the human-readable rendering, never in the JSON
  std::vector<std::pair<std::string, double>> timings_ms;
};

struct AnalyzeOptions {
  std::optional<int> stage_bound;  // default: dim + 3
  int threads = 1;
};

AnalysisReport analyze_graph(const QuotientGraph& g, const std::string& source,
                             const AnalyzeOptions& opts = {});

// Runs the truncation verifier for j = 1..jmax on every band and attaches the
// rows. thickness defaults to the support width of each band's generators
// (the maximum across bands, so every band uses one j0).
void attach_truncation(AnalysisReport& report, int jmax,
                       std::optional<int> thickness = std::nullopt);

// Byte-deterministic machine report (canonical term ordering, no timings).
std::string render_json(const AnalysisReport& report);

// Human-readable report with timings and aligned truncation tables.
std::string render_text(const AnalysisReport& report);

// Asserts every TruncationRow invariant; returns violation messages
// (empty means pass).
std::vector<std::string> verify_report(const AnalysisReport& report);

}  // namespace flatband
