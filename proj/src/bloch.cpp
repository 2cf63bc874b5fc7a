#include "flatband/bloch.hpp"

#include <algorithm>

namespace flatband {

BlochSystem build_bloch(const QuotientGraph& g) {
  BlochSystem b;
  b.n = g.vertex_count();
  b.dim = g.dim();
  b.a_hat = PolyMatrix<Rat>(b.n, b.n, b.dim);
  for (const auto& e : g.edges()) {
    b.a_hat.at(e.i, e.j).add_term(e.offset, Rat(1));
    b.a_hat.at(e.j, e.i).add_term(ivec_neg(e.offset), Rat(1));
  }
  b.degrees.resize(static_cast<size_t>(b.n));
  for (int i = 0; i < b.n; ++i) b.degrees[static_cast<size_t>(i)] = g.degree(i);
  return b;
}

Laurent<UniPoly> char_det(const BlochSystem& b) {
  PolyMatrix<UniPoly> pencil(b.n, b.n, b.dim);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j)
      pencil.at(i, j) = map_laurent<UniPoly>(b.a_hat.at(i, j),
                                             [](const Rat& c) { return UniPoly(c); });
  IntVec zero_exp(static_cast<size_t>(b.dim), 0);
  for (int i = 0; i < b.n; ++i) {
    // subtract mu * deg(i) on the diagonal
    UniPoly mu_deg = UniPoly::linear(Rat(0), Rat(-b.degrees[static_cast<size_t>(i)]));
    pencil.at(i, i).add_term(zero_exp, mu_deg);
  }
  return determinant(pencil, Laurent<UniPoly>::constant(b.dim, UniPoly(Rat(1))));
}

namespace {

FlatBand band_from_factor(UniPoly q, int multiplicity) {
  FlatBand band;
  band.minpoly_mu = std::move(q);
  band.minpoly_lambda = band.minpoly_mu.shift_argument(Rat(1));  // q(lambda + 1)
  band.multiplicity_in_gcd = multiplicity;
  band.field = make_field(band.minpoly_mu);
  band.mu = NFElem::generator(band.field);
  band.lambda = band.mu - NFElem::from_rational(band.field, Rat(1));
  band.mu_roots = isolate_real_roots(band.minpoly_mu);
  return band;
}

// Compare two bands by their smallest real root, refining the isolating
// intervals until they are disjoint. Distinct irreducible polynomials never
// share a root, so this terminates.
bool band_less(FlatBand& a, FlatBand& b) {
  RootInterval ia = a.mu_roots.front();
  RootInterval ib = b.mu_roots.front();
  while (!(ia.hi < ib.lo || ib.hi < ia.lo || (ia.is_exact() && ib.is_exact()))) {
    Rat wa = ia.hi - ia.lo;
    Rat wb = ib.hi - ib.lo;
    Rat target = std::max(wa, wb) / 4;
    ia = refine_root(a.minpoly_mu, ia, target);
    ib = refine_root(b.minpoly_mu, ib, target);
  }
  a.mu_roots.front() = ia;
  b.mu_roots.front() = ib;
  if (ia.is_exact() && ib.is_exact()) return ia.lo < ib.lo;
  return ia.hi < ib.lo ? true : false;
}

}  // namespace

FlatBand make_rational_band(const Rat& mu0) {
  return band_from_factor(UniPoly::linear(-mu0, Rat(1)), 1);
}

std::vector<FlatBand> flat_bands(const BlochSystem& b) {
  Laurent<UniPoly> det = char_det(b);
  std::vector<UniPoly> coeffs;
  for (const auto& [e, c] : det.terms()) {
    (void)e;
    coeffs.push_back(c);
  }
  std::vector<FlatBand> bands;
  if (coeffs.empty()) {
    // determinant identically zero cannot happen for A - mu*D (the mu^n
    // coefficient is +-det(D) != 0), but guard anyway
    throw EngineError("characteristic determinant is identically zero");
  }
  UniPoly g = unipoly_gcd(std::span<const UniPoly>(coeffs));
  if (g.degree() == 0) return bands;
  Factorization fac = factor_rational(g);
  for (auto& [q, mult] : fac.factors) {
    if (count_real_roots(q) == 0) continue;  // defensive: cannot occur (self-adjoint)
    bands.push_back(band_from_factor(q, mult));
  }
  std::sort(bands.begin(), bands.end(),
            [](FlatBand& x, FlatBand& y) { return band_less(x, y); });
  return bands;
}

PolyMatrix<NFElem> specialize(const BlochSystem& b, const FlatBand& band) {
  PolyMatrix<NFElem> m(b.n, b.n, b.dim);
  const FieldPtr& f = band.field;
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j)
      m.at(i, j) = map_laurent<NFElem>(
          b.a_hat.at(i, j), [&](const Rat& c) { return NFElem::from_rational(f, c); });
  IntVec zero_exp(static_cast<size_t>(b.dim), 0);
  for (int i = 0; i < b.n; ++i) {
    NFElem diag = -(band.mu * NFElem::from_rational(f, Rat(b.degrees[static_cast<size_t>(i)])));
    m.at(i, i).add_term(zero_exp, diag);
  }
  return m;
}

EigenfunctionTable realize_eigenfunction(const std::vector<Laurent<NFElem>>& v,
                                         const QuotientGraph& g) {
  bool all_zero = true;
  for (const auto& comp : v)
    if (!comp.is_zero()) all_zero = false;
  if (all_zero || v.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("eigenfunction vector is zero or has wrong length");
  EigenfunctionTable t;
  for (size_t i = 0; i < v.size(); ++i) {
    for (const auto& [e, c] : v[i].terms())
      t.entries[{e, static_cast<int>(i)}] = c;
  }
  return t;
}

std::vector<Laurent<NFElem>> bloch_transform(const EigenfunctionTable& table, int n,
                                             int dim, const FieldPtr& field) {
  (void)field;
  std::vector<Laurent<NFElem>> v(static_cast<size_t>(n), Laurent<NFElem>(dim));
  for (const auto& [cv, value] : table.entries)
    v[static_cast<size_t>(cv.vertex)].add_term(cv.cell, value);
  return v;
}

}  // namespace flatband
