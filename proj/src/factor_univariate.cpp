#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "flatband/common.hpp"
#include "flatband/unipoly.hpp"

// Factorization over Q: squarefree decomposition has already split the input
// (see factor_rational at the bottom); each squarefree part is made integral
// and monic via the lc-power substitution and factored by Zassenhaus:
// Berlekamp mod p, quadratic Hensel lifting to past the Landau-Mignotte
// bound, then subset recombination.

namespace flatband {
namespace {

// ---------- integer polynomials (little-endian, trimmed) ----------

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int z_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  z_trim(r);
  return r;
}

// Division by a monic divisor over Z; returns false when the remainder is
// nonzero (the quotient is then meaningless).
bool z_divide_monic(const ZPoly& num, const ZPoly& den, ZPoly* quo) {
  assert(!den.empty() && den.back() == 1);
  ZPoly rem = num;
  int dn = z_deg(num), dd = z_deg(den);
  if (dn < dd) {
    z_trim(rem);
    if (!rem.empty()) return false;
    if (quo) quo->clear();
    return true;
  }
  ZPoly q(static_cast<size_t>(dn - dd) + 1, mpz_class(0));
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class c = rem[static_cast<size_t>(k + dd)];
    if (c == 0) continue;
    q[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<size_t>(k + i)] -= c * den[static_cast<size_t>(i)];
  }
  z_trim(rem);
  if (!rem.empty()) return false;
  if (quo) *quo = std::move(q);
  return true;
}

mpz_class z_content(const ZPoly& a) {
  mpz_class g(0);
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly z_div_const(const ZPoly& a, const mpz_class& c) {
  ZPoly r = a;
  for (auto& x : r) {
    assert(x % c == 0);
    x /= c;
  }
  return r;
}

// ceil(sqrt(sum of squared coefficients))
mpz_class z_norm2_ceil(const ZPoly& a) {
  mpz_class s(0);
  for (const auto& c : a) s += c * c;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  if (r * r < s) r += 1;
  return r;
}

// ---------- polynomials over F_p, p a small odd prime ----------

using PPoly = std::vector<uint64_t>;

uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invm(uint64_t a, uint64_t p) { return powm(a % p, p - 2, p); }

void p_trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int p_deg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly p_from_z(const ZPoly& a, uint64_t p) {
  PPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    mpz_class m = a[i] % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    r[i] = m.get_ui();
  }
  p_trim(r);
  return r;
}

PPoly p_mul(const PPoly& a, const PPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulm(a[i], b[j], p)) % p;
  p_trim(r);
  return r;
}

PPoly p_sub(const PPoly& a, const PPoly& b, uint64_t p) {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  p_trim(r);
  return r;
}

PPoly p_scale(const PPoly& a, uint64_t s, uint64_t p) {
  PPoly r = a;
  for (auto& x : r) x = mulm(x, s, p);
  p_trim(r);
  return r;
}

// remainder of a modulo b (b nonzero)
PPoly p_mod(const PPoly& a, const PPoly& b, uint64_t p) {
  PPoly rem = a;
  p_trim(rem);
  int db = p_deg(b);
  uint64_t inv_lc = invm(b.back(), p);
  while (p_deg(rem) >= db) {
    int k = p_deg(rem) - db;
    uint64_t c = mulm(rem.back(), inv_lc, p);
    for (int i = 0; i <= db; ++i) {
      size_t idx = static_cast<size_t>(k + i);
      rem[idx] = (rem[idx] + p - mulm(c, b[static_cast<size_t>(i)], p)) % p;
    }
    p_trim(rem);
  }
  return rem;
}

PPoly p_divexact(const PPoly& a, const PPoly& b, uint64_t p) {
  PPoly rem = a;
  int db = p_deg(b);
  uint64_t inv_lc = invm(b.back(), p);
  PPoly q(a.size(), 0);
  while (p_deg(rem) >= db) {
    int k = p_deg(rem) - db;
    uint64_t c = mulm(rem.back(), inv_lc, p);
    q[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= db; ++i) {
      size_t idx = static_cast<size_t>(k + i);
      rem[idx] = (rem[idx] + p - mulm(c, b[static_cast<size_t>(i)], p)) % p;
    }
    p_trim(rem);
  }
  assert(rem.empty());
  p_trim(q);
  return q;
}

PPoly p_monic(const PPoly& a, uint64_t p) {
  if (a.empty()) return a;
  return p_scale(a, invm(a.back(), p), p);
}

PPoly p_gcd(PPoly a, PPoly b, uint64_t p) {
  while (!b.empty()) {
    PPoly r = p_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return p_monic(a, p);
}

// extended euclid: s*a + t*b == 1, a and b coprime
void p_bezout(const PPoly& a, const PPoly& b, uint64_t p, PPoly* s, PPoly* t) {
  PPoly r0 = a, r1 = b;
  PPoly s0 = {1}, s1 = {};
  PPoly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    // quotient of r0 by r1
    PPoly rem = r0, q(r0.size(), 0);
    int db = p_deg(r1);
    uint64_t inv_lc = invm(r1.back(), p);
    while (p_deg(rem) >= db) {
      int k = p_deg(rem) - db;
      uint64_t c = mulm(rem.back(), inv_lc, p);
      q[static_cast<size_t>(k)] = c;
      for (int i = 0; i <= db; ++i) {
        size_t idx = static_cast<size_t>(k + i);
        rem[idx] = (rem[idx] + p - mulm(c, r1[static_cast<size_t>(i)], p)) % p;
      }
      p_trim(rem);
    }
    p_trim(q);
    PPoly s2 = p_sub(s0, p_mul(q, s1, p), p);
    PPoly t2 = p_sub(t0, p_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd, must be a nonzero constant
  assert(p_deg(r0) == 0);
  uint64_t inv = invm(r0[0], p);
  *s = p_scale(s0, inv, p);
  *t = p_scale(t0, inv, p);
}

PPoly p_powmod_x(const PPoly& f, uint64_t e, uint64_t p) {
  PPoly result = {1};
  PPoly base = p_mod(PPoly{0, 1}, f, p);
  while (e) {
    if (e & 1) result = p_mod(p_mul(result, base, p), f, p);
    base = p_mod(p_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// nullspace basis of an n x n matrix over F_p (row-major)
std::vector<std::vector<uint64_t>> p_nullspace(std::vector<std::vector<uint64_t>> m,
                                               uint64_t p) {
  size_t n = m.size();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot_col(n, false);
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[row], m[piv]);
    uint64_t inv = invm(m[row][col], p);
    for (size_t j = col; j < n; ++j) m[row][j] = mulm(m[row][j], inv, p);
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      uint64_t c = m[i][col];
      for (size_t j = col; j < n; ++j)
        m[i][j] = (m[i][j] + p - mulm(c, m[row][j], p)) % p;
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot_col[col] = true;
    ++row;
  }
  std::vector<std::vector<uint64_t>> basis;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    std::vector<uint64_t> v(n, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      uint64_t c = m[r][free_col];
      if (c) v[static_cast<size_t>(pivot_col_of_row[r])] = p - c;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool p_less(const PPoly& a, const PPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<PPoly> berlekamp(const PPoly& f, uint64_t p) {
  int n = p_deg(f);
  if (n == 1) return {f};
  PPoly xp = p_powmod_x(f, p, p);
  std::vector<PPoly> xpow(static_cast<size_t>(n));
  xpow[0] = {1};
  for (int i = 1; i < n; ++i) xpow[static_cast<size_t>(i)] =
      p_mod(p_mul(xpow[static_cast<size_t>(i - 1)], xp, p), f, p);
  // rows of the Frobenius matrix; nullspace of (Q^T - I)
  std::vector<std::vector<uint64_t>> a(static_cast<size_t>(n),
                                       std::vector<uint64_t>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    const PPoly& r = xpow[static_cast<size_t>(i)];
    for (size_t j = 0; j < r.size(); ++j) a[j][static_cast<size_t>(i)] = r[j];
    a[static_cast<size_t>(i)][static_cast<size_t>(i)] =
        (a[static_cast<size_t>(i)][static_cast<size_t>(i)] + p - 1) % p;
  }
  auto basis = p_nullspace(std::move(a), p);
  size_t nfactors = basis.size();
  std::vector<PPoly> factors = {f};
  for (const auto& vraw : basis) {
    if (factors.size() == nfactors) break;
    PPoly v(vraw.begin(), vraw.end());
    p_trim(v);
    if (p_deg(v) < 1) continue;
    std::vector<PPoly> next;
    for (const PPoly& u : factors) {
      if (p_deg(u) == 1) {
        next.push_back(u);
        continue;
      }
      PPoly rem = u;
      std::vector<PPoly> pieces;
      for (uint64_t c = 0; c < p && p_deg(rem) > 0; ++c) {
        PPoly vc = p_mod(v, rem, p);
        if (vc.empty()) vc = {0};
        vc[0] = (vc[0] + p - c) % p;
        p_trim(vc);
        if (vc.empty()) {  // v === c mod rem: no further split by this v
          break;
        }
        PPoly g = p_gcd(rem, vc, p);
        if (p_deg(g) > 0 && p_deg(g) < p_deg(rem)) {
          pieces.push_back(g);
          rem = p_divexact(rem, g, p);
        }
      }
      if (p_deg(rem) > 0) pieces.push_back(rem);
      for (auto& q : pieces) next.push_back(p_monic(q, p));
    }
    factors = std::move(next);
  }
  std::sort(factors.begin(), factors.end(), p_less);
  return factors;
}

// ---------- Hensel lifting over Z/m, m = p^(2^k) ----------

// coefficients held in [0, m)
ZPoly m_reduce(const ZPoly& a, const mpz_class& m) {
  ZPoly r = a;
  for (auto& x : r) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  z_trim(r);
  return r;
}

ZPoly m_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  return m_reduce(z_mul(a, b), m);
}

ZPoly m_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return m_reduce(r, m);
}

ZPoly m_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return m_reduce(r, m);
}

// divmod by a monic divisor, coefficients mod m
void m_divmod_monic(const ZPoly& num, const ZPoly& den, const mpz_class& m,
                    ZPoly* quo, ZPoly* rem) {
  assert(!den.empty() && den.back() == 1);
  ZPoly r = num;
  z_trim(r);
  int dd = z_deg(den);
  ZPoly q;
  if (z_deg(r) >= dd) q.assign(static_cast<size_t>(z_deg(r) - dd) + 1, mpz_class(0));
  while (z_deg(r) >= dd) {
    int k = z_deg(r) - dd;
    mpz_class c = r.back();
    q[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i) {
      size_t idx = static_cast<size_t>(k + i);
      r[idx] -= c * den[static_cast<size_t>(i)];
      mpz_mod(r[idx].get_mpz_t(), r[idx].get_mpz_t(), m.get_mpz_t());
    }
    z_trim(r);
  }
  if (quo) *quo = m_reduce(q, m);
  if (rem) *rem = std::move(r);
}

struct HenselPair {
  ZPoly g, h, s, t;
};

// One quadratic step: modulus m -> m^2 (von zur Gathen & Gerhard 15.10).
HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const mpz_class& m) {
  mpz_class m2 = m * m;
  ZPoly e = m_sub(m_reduce(f, m2), m_mul(in.g, in.h, m2), m2);
  ZPoly q, r;
  m_divmod_monic(m_mul(in.s, e, m2), in.h, m2, &q, &r);
  HenselPair out;
  out.g = m_add(in.g, m_add(m_mul(in.t, e, m2), m_mul(q, in.g, m2), m2), m2);
  out.h = m_add(in.h, r, m2);
  ZPoly b = m_sub(m_add(m_mul(in.s, out.g, m2), m_mul(in.t, out.h, m2), m2), ZPoly{1}, m2);
  ZPoly c, d;
  m_divmod_monic(m_mul(in.s, b, m2), out.h, m2, &c, &d);
  out.s = m_sub(in.s, d, m2);
  out.t = m_sub(in.t, m_add(m_mul(in.t, b, m2), m_mul(c, out.g, m2), m2), m2);
  return out;
}

ZPoly z_from_p(const PPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mpz_class(static_cast<unsigned long>(a[i]));
  return r;
}

// Lift the modular factorization f == prod(facs) mod p to modulus m_fin
// (a power p^(2^k)); f is monic with coefficients already reduced mod m_fin.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<PPoly>& facs,
                                    uint64_t p, const mpz_class& m_fin) {
  if (facs.size() == 1) return {f};
  size_t half = facs.size() / 2;
  PPoly g0p = {1}, h0p = {1};
  for (size_t i = 0; i < half; ++i) g0p = p_mul(g0p, facs[i], p);
  for (size_t i = half; i < facs.size(); ++i) h0p = p_mul(h0p, facs[i], p);
  PPoly sp, tp;
  p_bezout(g0p, h0p, p, &sp, &tp);
  HenselPair pair{z_from_p(g0p), z_from_p(h0p), z_from_p(sp), z_from_p(tp)};
  mpz_class m(static_cast<unsigned long>(p));
  while (m < m_fin) {
    pair = hensel_step(f, pair, m);
    m = m * m;
  }
  assert(m == m_fin);
  assert(!pair.g.empty() && pair.g.back() == 1);
  assert(!pair.h.empty() && pair.h.back() == 1);
  std::vector<ZPoly> left = multifactor_lift(
      pair.g, std::vector<PPoly>(facs.begin(), facs.begin() + static_cast<long>(half)), p,
      m_fin);
  std::vector<ZPoly> right = multifactor_lift(
      pair.h, std::vector<PPoly>(facs.begin() + static_cast<long>(half), facs.end()), p,
      m_fin);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

ZPoly symmetric_rep(const ZPoly& a, const mpz_class& m) {
  mpz_class halfm = m / 2;
  ZPoly r = a;
  for (auto& x : r) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > halfm) x -= m;
  }
  z_trim(r);
  return r;
}

const std::vector<uint64_t>& small_primes() {
  static const std::vector<uint64_t> primes = [] {
    std::vector<uint64_t> ps;
    std::vector<bool> sieve(10000, true);
    for (size_t i = 2; i < sieve.size(); ++i) {
      if (!sieve[i]) continue;
      if (i >= 3) ps.push_back(i);
      for (size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    }
    return ps;
  }();
  return primes;
}

// Zassenhaus on a monic squarefree integer polynomial, degree >= 2.
std::vector<ZPoly> zassenhaus_monic(const ZPoly& f) {
  int n = z_deg(f);
  assert(f.back() == 1 && n >= 2);
  // pick a prime keeping f squarefree mod p; among the first few suitable
  // primes prefer the one with the fewest modular factors
  std::vector<PPoly> best_factors;
  uint64_t best_p = 0;
  int suitable_seen = 0;
  for (uint64_t p : small_primes()) {
    PPoly fp = p_from_z(f, p);
    if (p_deg(fp) != n) continue;  // cannot happen for monic f, kept for clarity
    PPoly der(fp.size() - 1);
    for (size_t i = 1; i < fp.size(); ++i)
      der[i - 1] = mulm(fp[i], i % p, p);
    p_trim(der);
    if (der.empty() || p_deg(p_gcd(fp, der, p)) != 0) continue;
    auto facs = berlekamp(p_monic(fp, p), p);
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_factors = std::move(facs);
      best_p = p;
    }
    if (++suitable_seen >= 4 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw EngineError("no suitable prime found for factorization");
  if (best_factors.size() == 1) return {f};

  uint64_t p = best_p;
  // Landau-Mignotte: any monic factor g of f has |g|_inf <= 2^n * |f|_2
  mpz_class bound = z_norm2_ceil(f);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  mpz_class target = 2 * bound + 1;
  mpz_class m_fin(static_cast<unsigned long>(p));
  while (m_fin < target) m_fin = m_fin * m_fin;

  std::vector<ZPoly> lifted = multifactor_lift(m_reduce(f, m_fin), best_factors, p, m_fin);

  // subset recombination
  std::vector<ZPoly> result;
  std::vector<size_t> active(lifted.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = i;
  ZPoly rem_f = f;
  size_t take = 1;
  while (2 * take <= active.size()) {
    cancel::checkpoint();
    // enumerate index combinations of size `take` over active
    std::vector<size_t> comb(take);
    for (size_t i = 0; i < take; ++i) comb[i] = i;
    bool found = false;
    while (true) {
      ZPoly prod = {1};
      for (size_t i : comb) prod = m_mul(prod, lifted[active[i]], m_fin);
      ZPoly cand = symmetric_rep(prod, m_fin);
      ZPoly quo;
      if (z_divide_monic(rem_f, cand, &quo)) {
        result.push_back(cand);
        rem_f = std::move(quo);
        std::vector<size_t> next_active;
        for (size_t i = 0, c = 0; i < active.size(); ++i) {
          if (c < comb.size() && comb[c] == i) {
            ++c;
            continue;
          }
          next_active.push_back(active[i]);
        }
        active = std::move(next_active);
        found = true;
        break;
      }
      // next combination
      size_t i = take;
      while (i-- > 0) {
        if (comb[i] != i + active.size() - take) {
          ++comb[i];
          for (size_t j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
          break;
        }
        if (i == 0) goto combos_done;
      }
      if (comb[0] > active.size() - take) break;
    }
  combos_done:
    if (!found) ++take;
  }
  if (z_deg(rem_f) > 0) result.push_back(rem_f);
  return result;
}

// primitive integer polynomial from a monic rational one (times a constant)
ZPoly z_primitive_from_unipoly(const UniPoly& s) {
  mpz_class lcm_den(1);
  for (const Rat& c : s.coeffs())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z(s.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    Rat scaled = s.coeffs()[i] * Rat(lcm_den);
    assert(rat_is_integer(scaled));
    z[i] = scaled.get_num();
  }
  mpz_class cont = z_content(z);
  if (z.back() < 0) cont = -cont;
  return z_div_const(z, cont);
}

UniPoly unipoly_from_z_monic(const ZPoly& z) {
  std::vector<Rat> c(z.size());
  Rat lc(z.back());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i]) / lc;
  return UniPoly(std::move(c));
}

// complete factorization of a monic squarefree polynomial over Q
std::vector<UniPoly> factor_squarefree(const UniPoly& s) {
  if (s.degree() == 1) return {s};
  ZPoly fz = z_primitive_from_unipoly(s);
  int n = z_deg(fz);
  // monic substitution F(x) = a^(n-1) f(x/a)
  mpz_class a = fz.back();
  ZPoly big(fz.size());
  mpz_class apow(1);
  for (int i = n; i >= 0; --i) {
    big[static_cast<size_t>(i)] = fz[static_cast<size_t>(i)] * apow;
    if (i > 0) apow *= a;
  }
  assert(big.back() == 1);
  std::vector<ZPoly> monic_factors = zassenhaus_monic(big);
  std::vector<UniPoly> out;
  for (const ZPoly& g : monic_factors) {
    // map back through x -> a*x and take the primitive part
    ZPoly h(g.size());
    mpz_class pw(1);
    for (size_t i = 0; i < g.size(); ++i) {
      h[i] = g[i] * pw;
      pw *= a;
    }
    mpz_class cont = z_content(h);
    if (h.back() < 0) cont = -cont;
    out.push_back(unipoly_from_z_monic(z_div_const(h, cont)));
  }
  return out;
}

bool unipoly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  }
  return false;
}

}  // namespace

Factorization factor_rational(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factorization of zero polynomial");
  Factorization out;
  out.constant = p.leading();
  if (p.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const UniPoly& irr : factor_squarefree(part)) out.factors.emplace_back(irr, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return unipoly_less(x.first, y.first); });
  return out;
}

}  // namespace flatband
