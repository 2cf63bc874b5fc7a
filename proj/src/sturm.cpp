#include <stdexcept>
#include <vector>

#include "flatband/common.hpp"
#include "flatband/unipoly.hpp"

namespace flatband {

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  seq.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const UniPoly& a = seq[seq.size() - 2];
    const UniPoly& b = seq.back();
    auto [q, r] = UniPoly::divmod(a, b);
    (void)q;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

// Sign variations of the sequence at x.
int variations_at(const std::vector<UniPoly>& seq, const Rat& x) {
  int vars = 0, last = 0;
  for (const UniPoly& s : seq) {
    int sg = sgn(s.eval(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++vars;
    last = sg;
  }
  return vars;
}

// Sign variations at +inf / -inf from leading coefficients.
int variations_at_infinity(const std::vector<UniPoly>& seq, int dir) {
  int vars = 0, last = 0;
  for (const UniPoly& s : seq) {
    if (s.is_zero()) continue;
    int sg = sgn(s.leading());
    if (dir < 0 && (s.degree() % 2) == 1) sg = -sg;
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++vars;
    last = sg;
  }
  return vars;
}

// Cauchy bound: all real roots lie in (-M, M).
Rat root_bound(const UniPoly& p) {
  Rat m(0);
  const Rat& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rat q = abs(p.coeff(i) / lc);
    if (q > m) m = q;
  }
  return m + 1;
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly f = p.monic();
  if (f.degree() <= 1) return f;
  UniPoly g = unipoly_gcd(f, f.derivative());
  return g.degree() == 0 ? f : f.divide_exact(g);
}

// Roots of squarefree f in the open interval (lo, hi); f(lo), f(hi) != 0.
// Emits ascending: intervals contain exactly one root strictly inside,
// exact hits are emitted as degenerate intervals.
void isolate_rec(const UniPoly& f, const std::vector<UniPoly>& seq, const Rat& lo,
                 const Rat& hi, std::vector<RootInterval>& out) {
  cancel::checkpoint();
  int nroots = variations_at(seq, lo) - variations_at(seq, hi);
  if (nroots == 0) return;
  if (nroots == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rat mid = (lo + hi) / 2;
  if (!rat_is_zero(f.eval(mid))) {
    isolate_rec(f, seq, lo, mid, out);
    isolate_rec(f, seq, mid, hi, out);
    return;
  }
  // Midpoint is itself a root: carve out a punctured neighbourhood around it.
  Rat eps = (hi - lo) / 4;
  while (rat_is_zero(f.eval(mid - eps)) || rat_is_zero(f.eval(mid + eps)) ||
         variations_at(seq, mid - eps) - variations_at(seq, mid + eps) != 1) {
    eps /= 2;
  }
  isolate_rec(f, seq, lo, mid - eps, out);
  out.push_back({mid, mid});
  isolate_rec(f, seq, mid + eps, hi, out);
}

}  // namespace

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real roots of zero polynomial");
  UniPoly f = squarefree_part(p);
  if (f.degree() <= 0) return 0;
  auto seq = sturm_sequence(f);
  return variations_at_infinity(seq, -1) - variations_at_infinity(seq, +1);
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real roots of zero polynomial");
  UniPoly f = squarefree_part(p);
  std::vector<RootInterval> out;
  if (f.degree() <= 0) return out;
  if (f.degree() == 1) {
    Rat root = -f.coeff(0) / f.coeff(1);
    out.push_back({root, root});
    return out;
  }
  auto seq = sturm_sequence(f);
  Rat bound = root_bound(f);
  isolate_rec(f, seq, -bound, bound, out);
  // isolate_rec emits in ascending order by construction
  return out;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rat& width) {
  if (iv.is_exact()) return iv;
  UniPoly f = squarefree_part(p);
  int sign_hi = sgn(f.eval(iv.hi));
  while (iv.hi - iv.lo > width) {
    cancel::checkpoint();
    Rat mid = iv.midpoint();
    int sm = sgn(f.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == sign_hi)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

}  // namespace flatband
