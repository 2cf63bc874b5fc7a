#include "flatband/report.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include <json.hpp>

namespace flatband {

namespace {

using OrderedJson = nlohmann::ordered_json;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<std::string> lambda_approx_strings(const FlatBand& band) {
  std::vector<std::string> out;
  Rat width = Rat(1, 1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 13);
  width = Rat(1) / Rat(den);
  for (const RootInterval& iv : band.mu_roots) {
    RootInterval fine = refine_root(band.minpoly_mu, iv, width);
    out.push_back(rat_to_decimal(fine.midpoint() - 1, 12));  // lambda = mu - 1
  }
  return out;
}

BandReport analyze_band(const BlochSystem& sys, const QuotientGraph& g,
                        const FlatBand& band, int stage_bound) {
  BandReport br;
  br.band = band;
  PolyMatrix<NFElem> specialized = specialize(sys, band);
  auto [pencil, shift] = polynomialize(specialized);
  br.density = compute_density(pencil, band.field, stage_bound);
  br.density.shift = shift;
  for (const ModVec& gen : br.density.generators)
    br.generator_tables.push_back(realize_eigenfunction(gen.to_components(), g));
  return br;
}

}  // namespace

AnalysisReport analyze_graph(const QuotientGraph& g, const std::string& source,
                             const AnalyzeOptions& opts) {
  AnalysisReport report;
  report.source = source;
  report.graph = g;
  auto t0 = std::chrono::steady_clock::now();
  BlochSystem sys = build_bloch(g);
  std::vector<FlatBand> bands = flat_bands(sys);
  report.timings_ms.emplace_back("flat_band_search", ms_since(t0));

  int stage_bound = opts.stage_bound.value_or(g.dim() + 3);
  t0 = std::chrono::steady_clock::now();
  if (opts.threads > 1 && bands.size() > 1) {
    std::vector<std::future<BandReport>> futures;
    for (const FlatBand& band : bands)
      futures.push_back(std::async(std::launch::async, analyze_band, std::cref(sys),
                                   std::cref(g), std::cref(band), stage_bound));
    for (auto& f : futures) report.bands.push_back(f.get());
  } else {
    for (const FlatBand& band : bands)
      report.bands.push_back(analyze_band(sys, g, band, stage_bound));
  }
  report.timings_ms.emplace_back("density", ms_since(t0));
  return report;
}

void attach_truncation(AnalysisReport& report, int jmax, std::optional<int> thickness) {
  auto t0 = std::chrono::steady_clock::now();
  int j0 = 1;
  if (thickness) {
    j0 = *thickness;
  } else {
    for (const BandReport& br : report.bands)
      j0 = std::max(j0, support_width(br.generator_tables));
  }
  if (j0 < 1 || jmax < 1) throw std::invalid_argument("jmax and thickness must be >= 1");
  std::vector<int> js;
  for (int j = 1; j <= jmax; ++j) js.push_back(j);
  report.truncation.clear();
  for (const BandReport& br : report.bands)
    report.truncation.push_back(convergence_report(report.graph, br.band, js, j0));
  report.thickness = j0;
  report.has_truncation = true;
  report.timings_ms.emplace_back("truncation", ms_since(t0));
}

namespace {

OrderedJson row_to_json(const TruncationRow& r) {
  OrderedJson j;
  j["j"] = r.j;
  j["F_size"] = r.f_size;
  j["boundary_size"] = r.boundary_size;
  j["dim_finite_support"] = r.dim_finite_support;
  j["shubin_mult"] = r.shubin_mult;
  j["avg_density"] = rat_to_fraction_string(r.avg_density);
  j["shubin_density"] = rat_to_fraction_string(r.shubin_density);
  j["bound"] = rat_to_fraction_string(r.bound);
  return j;
}

OrderedJson band_to_json(const BandReport& br) {
  OrderedJson j;
  j["minpoly"] = br.band.minpoly_mu.to_string("mu");
  j["minpoly_lambda"] = br.band.minpoly_lambda.to_string("lambda");
  j["multiplicity_in_gcd"] = br.band.multiplicity_in_gcd;
  j["lambda_approx"] = lambda_approx_strings(br.band);  // non-authoritative
  j["density"] = rat_to_fraction_string(br.density.density);
  j["kernel_rank"] = br.density.kernel_rank;
  j["ranks"] = br.density.ranks;
  j["shift"] = br.density.shift;
  OrderedJson gens = OrderedJson::array();
  for (const ModVec& g : br.density.generators) {
    OrderedJson comps = OrderedJson::array();
    for (const auto& comp : g.to_components()) comps.push_back(comp.to_string());
    gens.push_back(comps);
  }
  j["generators"] = gens;
  return j;
}

}  // namespace

std::string render_json(const AnalysisReport& report) {
  OrderedJson j;
  j["source"] = report.source;
  OrderedJson graph;
  graph["dim"] = report.graph.dim();
  graph["vertices"] = report.graph.vertex_labels();
  std::vector<int> degs;
  for (int i = 0; i < report.graph.vertex_count(); ++i)
    degs.push_back(report.graph.degree(i));
  graph["degrees"] = degs;
  graph["edge_count"] = report.graph.edges().size();
  j["graph"] = graph;
  OrderedJson bands = OrderedJson::array();
  for (const BandReport& br : report.bands) bands.push_back(band_to_json(br));
  j["flat_bands"] = bands;
  if (report.has_truncation) {
    OrderedJson t;
    t["thickness"] = report.thickness;
    OrderedJson per_band = OrderedJson::array();
    for (const auto& rows : report.truncation) {
      OrderedJson arr = OrderedJson::array();
      for (const TruncationRow& r : rows) arr.push_back(row_to_json(r));
      per_band.push_back(arr);
    }
    t["bands"] = per_band;
    j["truncation"] = t;
  }
  return j.dump(2) + "\n";
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "source: " << report.source << "\n";
  out << "graph: n=" << report.graph.vertex_count() << " d=" << report.graph.dim()
      << " degrees=[";
  for (int i = 0; i < report.graph.vertex_count(); ++i)
    out << (i ? "," : "") << report.graph.degree(i);
  out << "]\n";
  if (report.bands.empty()) {
    out << "no flat-band eigenvalues\n";
  }
  for (size_t b = 0; b < report.bands.size(); ++b) {
    const BandReport& br = report.bands[b];
    out << "\nflat band " << (b + 1) << ":\n";
    out << "  minpoly (mu):     " << br.band.minpoly_mu.to_string("mu") << "\n";
    out << "  minpoly (lambda): " << br.band.minpoly_lambda.to_string("lambda") << "\n";
    auto approx = lambda_approx_strings(br.band);
    out << "  lambda ~";
    for (const auto& a : approx) out << " " << a;
    out << "   (decimal approximation, non-authoritative)\n";
    out << "  density: " << rat_to_fraction_string(br.density.density)
        << "   kernel rank: " << br.density.kernel_rank << "   resolution ranks: [";
    for (size_t k = 0; k < br.density.ranks.size(); ++k)
      out << (k ? "," : "") << br.density.ranks[k];
    out << "]\n";
    out << "  generators:\n";
    for (const ModVec& g : br.density.generators) out << "    " << g.to_string() << "\n";
  }
  if (report.has_truncation) {
    out << "\ntruncation (thickness j0=" << report.thickness << "):\n";
    for (size_t b = 0; b < report.truncation.size(); ++b) {
      out << "band " << (b + 1) << ":\n";
      out << "    j      |F_j|  |bnd|  dim_fs   mult  avg_density  shubin_density  "
             "bound\n";
      for (const TruncationRow& r : report.truncation[b]) {
        char line[256];
        std::snprintf(line, sizeof(line), "  %3d %10ld %6ld %7ld %6ld  %-11s  %-14s  %s\n",
                      r.j, r.f_size, r.boundary_size, r.dim_finite_support,
                      r.shubin_mult, rat_to_fraction_string(r.avg_density).c_str(),
                      rat_to_fraction_string(r.shubin_density).c_str(),
                      rat_to_fraction_string(r.bound).c_str());
        out << line;
      }
    }
  }
  out << "\ntimings:\n";
  for (const auto& [stage, ms] : report.timings_ms) {
    char line[128];
    std::snprintf(line, sizeof(line), "  %-18s %10.1f ms\n", stage.c_str(), ms);
    out << line;
  }
  return out.str();
}

std::vector<std::string> verify_report(const AnalysisReport& report) {
  std::vector<std::string> violations;
  auto fail = [&](size_t band, int j, const std::string& what) {
    violations.push_back("band " + std::to_string(band + 1) +
                         (j >= 0 ? " row j=" + std::to_string(j) : "") + ": " + what);
  };
  int n = report.graph.vertex_count();
  for (size_t b = 0; b < report.bands.size(); ++b) {
    const Rat& dk = report.bands[b].density.density;
    if (dk < 0 || dk > 1) fail(b, -1, "density outside [0,1]");
    Rat scaled = dk * n;
    if (!rat_is_integer(scaled)) fail(b, -1, "density * n is not an integer");
    if (!report.has_truncation) continue;
    long prev_dim = -1;
    for (const TruncationRow& r : report.truncation[b]) {
      if (prev_dim >= 0 && r.dim_finite_support < prev_dim)
        fail(b, r.j, "dim_finite_support decreased");
      prev_dim = r.dim_finite_support;
      if (r.shubin_mult < r.dim_finite_support)
        fail(b, r.j, "shubin multiplicity below finite-support dimension");
      if (r.j < report.thickness) continue;  // error bounds hold from j0 on
      Rat avg_err = abs(r.avg_density - dk);
      if (avg_err > r.bound)
        fail(b, r.j, "averaged density violates the |boundary|/|F_j| bound: |" +
                         rat_to_fraction_string(r.avg_density) + " - " +
                         rat_to_fraction_string(dk) + "| > " +
                         rat_to_fraction_string(r.bound));
      Rat shubin_err = abs(r.shubin_density - dk);
      if (shubin_err > Rat(2) * r.bound)
        fail(b, r.j, "Shubin density violates the 2|boundary|/|F_j| bound: |" +
                         rat_to_fraction_string(r.shubin_density) + " - " +
                         rat_to_fraction_string(dk) + "| > 2*" +
                         rat_to_fraction_string(r.bound));
    }
  }
  return violations;
}

}  // namespace flatband
