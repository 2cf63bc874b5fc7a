#include "flatband/truncation.hpp"

#include <algorithm>
#include <map>

namespace flatband {

int support_width(const std::vector<EigenfunctionTable>& generators) {
  if (generators.empty())
    throw std::invalid_argument("support_width of empty generator list");
  int32_t width = 1;
  for (const auto& table : generators) {
    if (table.entries.empty())
      throw std::invalid_argument("support_width of an empty eigenfunction table");
    size_t d = table.entries.begin()->first.cell.size();
    IntVec mins(d, 0);
    bool first = true;
    for (const auto& [cv, val] : table.entries) {
      (void)val;
      for (size_t k = 0; k < d; ++k)
        mins[k] = first ? cv.cell[k] : std::min(mins[k], cv.cell[k]);
      first = false;
    }
    for (const auto& [cv, val] : table.entries) {
      (void)val;
      width = std::max(width, ivec_sup_norm(ivec_sub(cv.cell, mins)));
    }
  }
  return width;
}

namespace {

// The eigen-equation of the transformed system at vertex u, with the value
// function restricted to `support`: sum_{w ~ u, w in support} g(w)
// - mu deg(u) g(u) [u in support]. Rows are indexed by `equation_sites`.
NFMatrix restriction_system(const QuotientGraph& g, const FlatBand& band,
                            const std::vector<CellVertex>& support,
                            const std::vector<CellVertex>& equation_sites) {
  std::map<CellVertex, size_t> col_of;
  for (size_t i = 0; i < support.size(); ++i) col_of[support[i]] = i;
  NFMatrix m(equation_sites.size(),
             std::vector<NFElem>(support.size(), NFElem::zero(band.field)));
  NFElem one = NFElem::one(band.field);
  for (size_t r = 0; r < equation_sites.size(); ++r) {
    const CellVertex& u = equation_sites[r];
    for (const CellVertex& w : g.neighbors(u)) {
      auto it = col_of.find(w);
      if (it != col_of.end()) m[r][it->second] = m[r][it->second] + one;
    }
    auto self = col_of.find(u);
    if (self != col_of.end()) {
      NFElem mu_deg = band.mu * NFElem::from_rational(band.field, Rat(g.degree(u.vertex)));
      m[r][self->second] = m[r][self->second] - mu_deg;
    }
  }
  return m;
}

}  // namespace

long dim_finite_support_eigs(const QuotientGraph& g, const FlatBand& band, int j) {
  std::set<CellVertex> fj = cross_with_domain(g, folner_ball(g, j));
  std::set<CellVertex> sites = fj;
  for (const auto& v : thick_boundary(g, fj, 1)) sites.insert(v);
  std::vector<CellVertex> support(fj.begin(), fj.end());
  std::vector<CellVertex> equation_sites(sites.begin(), sites.end());
  NFMatrix m = restriction_system(g, band, support, equation_sites);
  return nf_nullity(std::move(m), support.size());
}

long shubin_multiplicity(const QuotientGraph& g, const FlatBand& band, int j, int j0) {
  std::set<CellVertex> fj = cross_with_domain(g, folner_ball(g, j));
  std::set<CellVertex> gamma = fj;
  for (const auto& v : thick_boundary(g, fj, j0)) gamma.insert(v);
  FiniteSection sec = induced_section(g, gamma);
  size_t n = sec.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    if (sec.degrees_internal[i] == 0)
      throw EngineError("induced section has an isolated vertex");
  }
  // A_Gamma - mu * D_internal: the multiplicity of lambda for the normalized
  // Laplacian of the finite graph equals the nullity of this pencil.
  NFMatrix m(n, std::vector<NFElem>(n, NFElem::zero(band.field)));
  NFElem one = NFElem::one(band.field);
  for (const auto& [a, b] : sec.adjacency) {
    m[static_cast<size_t>(a)][static_cast<size_t>(b)] =
        m[static_cast<size_t>(a)][static_cast<size_t>(b)] + one;
    m[static_cast<size_t>(b)][static_cast<size_t>(a)] =
        m[static_cast<size_t>(b)][static_cast<size_t>(a)] + one;
  }
  for (size_t i = 0; i < n; ++i) {
    NFElem mu_deg =
        band.mu * NFElem::from_rational(band.field, Rat(sec.degrees_internal[i]));
    m[i][i] = m[i][i] - mu_deg;
  }
  return nf_nullity(std::move(m), n);
}

std::vector<TruncationRow> convergence_report(const QuotientGraph& g,
                                              const FlatBand& band,
                                              const std::vector<int>& j_range, int j0) {
  if (j_range.empty()) throw std::invalid_argument("empty j range");
  for (size_t k = 1; k < j_range.size(); ++k)
    if (j_range[k] <= j_range[k - 1])
      throw std::invalid_argument("j range must be strictly ascending");
  std::vector<TruncationRow> rows;
  long prev_dim = -1;
  for (int j : j_range) {
    cancel::checkpoint();
    TruncationRow row;
    row.j = j;
    std::set<CellVertex> fj = cross_with_domain(g, folner_ball(g, j));
    row.f_size = static_cast<long>(fj.size());
    row.boundary_size = static_cast<long>(thick_boundary(g, fj, j0).size());
    row.dim_finite_support = dim_finite_support_eigs(g, band, j);
    row.shubin_mult = shubin_multiplicity(g, band, j, j0);
    row.avg_density = Rat(row.dim_finite_support, row.f_size);
    row.avg_density.canonicalize();
    row.shubin_density = Rat(row.shubin_mult, row.f_size);
    row.shubin_density.canonicalize();
    row.bound = Rat(row.boundary_size, row.f_size);
    row.bound.canonicalize();
    if (prev_dim >= 0 && row.dim_finite_support < prev_dim)
      throw EngineError("finite-support dimension decreased with j");
    prev_dim = row.dim_finite_support;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace flatband
