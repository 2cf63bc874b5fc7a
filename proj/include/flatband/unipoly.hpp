#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatband/rational.hpp"

namespace flatband {

// Dense univariate polynomial over the rationals, coefficients stored lowest
// degree first. The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(Rat constant);
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly variable();                 // x
  static UniPoly linear(Rat c0, Rat c1);     // c0 + c1*x

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const;             // zero beyond degree
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const Rat& s) const;
  UniPoly operator/(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;                     // error on zero
  Rat eval(const Rat& x) const;
  UniPoly shift_argument(const Rat& a) const;  // p(x + a)

  // (quotient, remainder); divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
  // Exact division; throws EngineError when the remainder is nonzero.
  UniPoly divide_exact(const UniPoly& den) const;

  std::string to_string(std::string_view var = "mu") const;

private:
  void trim();
  std::vector<Rat> c_;
};

// Monic gcd; gcd(0,0) is an error.
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);
// Monic gcd of a list; throws std::invalid_argument when all inputs are zero.
UniPoly unipoly_gcd(std::span<const UniPoly> ps);

// Yun's algorithm: p = lc * prod s_i^i with the s_i monic, squarefree and
// pairwise coprime. Only nontrivial s_i are returned.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

struct Factorization {
  Rat constant;  // leading coefficient of the input
  std::vector<std::pair<UniPoly, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization over Q. constant * prod f_i^{m_i} == p exactly.
Factorization factor_rational(const UniPoly& p);

// --- real roots (Sturm sequences, exact rational endpoints) ---

struct RootInterval {
  Rat lo, hi;  // lo == hi means the root is exactly lo
  bool is_exact() const { return lo == hi; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

// Number of distinct real roots of p (p nonzero).
int count_real_roots(const UniPoly& p);

// Disjoint isolating intervals for the distinct real roots of p, sorted
// ascending. Multiple roots are handled through the squarefree part.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

// Shrinks an isolating interval until hi - lo <= width (no-op on exact roots).
RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rat& width);

}  // namespace flatband
