#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "flatband/common.hpp"
#include "flatband/numberfield.hpp"
#include "flatband/rational.hpp"

namespace flatband {

// Coefficient-domain adapters shared by Laurent<C> instantiations
// (C is Rat, UniPoly or NFElem).
inline bool coeff_is_zero(const Rat& a) { return rat_is_zero(a); }
inline bool coeff_is_zero(const UniPoly& a) { return a.is_zero(); }
inline bool coeff_is_zero(const NFElem& a) { return a.is_zero(); }

inline bool coeff_is_one(const Rat& a) { return a == 1; }
inline bool coeff_is_one(const UniPoly& a) { return a.is_one(); }
inline bool coeff_is_one(const NFElem& a) { return a.is_one(); }

inline Rat coeff_divide_exact(const Rat& a, const Rat& b) { return a / b; }
inline UniPoly coeff_divide_exact(const UniPoly& a, const UniPoly& b) {
  return a.divide_exact(b);
}
inline NFElem coeff_divide_exact(const NFElem& a, const NFElem& b) {
  return a / b;
}

inline std::string coeff_to_string(const Rat& a) { return rat_to_string(a); }
inline std::string coeff_to_string(const UniPoly& a) {
  return a.is_constant() ? rat_to_string(a.coeff(0)) : a.to_string("mu");
}
inline std::string coeff_to_string(const NFElem& a) {
  return a.is_rational() ? rat_to_string(a.rep().coeff(0)) : a.to_string("mu");
}

// True when the coefficient renders as a bare token (no parentheses needed).
inline bool coeff_renders_bare(const Rat& a) { return sgn(a) > 0 && rat_is_integer(a); }
inline bool coeff_renders_bare(const UniPoly& a) {
  return a.is_constant() && !a.is_zero() && coeff_renders_bare(a.coeff(0));
}
inline bool coeff_renders_bare(const NFElem& a) {
  return a.is_rational() && !a.is_zero() && coeff_renders_bare(a.rational_value());
}

// Sparse multivariate Laurent polynomial in z_1..z_d over an exact
// coefficient domain C. Terms are kept in a map ordered lexicographically by
// exponent vector, which fixes the canonical printing order and makes
// equality cheap.
template <class C>
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(int dim) : dim_(dim) {}

  static Laurent constant(int dim, C c) {
    Laurent r(dim);
    r.add_term(IntVec(static_cast<size_t>(dim), 0), std::move(c));
    return r;
  }
  static Laurent monomial(int dim, const IntVec& e, C c) {
    Laurent r(dim);
    r.add_term(e, std::move(c));
    return r;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<IntVec, C>& terms() const { return terms_; }

  void add_term(const IntVec& e, const C& c) {
    if (coeff_is_zero(c)) return;
    check_dim(e);
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Laurent operator+(const Laurent& o) const {
    check_same(o);
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Laurent operator-(const Laurent& o) const {
    check_same(o);
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) {
      C neg = C() - c;
      r.add_term(e, neg);
    }
    return r;
  }

  Laurent operator-() const {
    Laurent r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, C() - c);
    return r;
  }

  Laurent operator*(const Laurent& o) const {
    check_same(o);
    Laurent r(dim_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term(ivec_add(e1, e2), c1 * c2);
    return r;
  }

  Laurent scaled(const C& s) const {
    Laurent r(dim_);
    if (coeff_is_zero(s)) return r;
    for (const auto& [e, c] : terms_) {
      C sc = c * s;
      if (!coeff_is_zero(sc)) r.terms_.emplace(e, std::move(sc));
    }
    return r;
  }

  // multiplication by the monomial z^g
  Laurent shifted(const IntVec& g) const {
    check_dim(g);
    Laurent r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(ivec_add(e, g), c);
    return r;
  }

  // z -> z^{-1}
  Laurent conjugated() const {
    Laurent r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(ivec_neg(e), c);
    return r;
  }

  bool operator==(const Laurent& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

  // componentwise minimum of exponent vectors (zero vector when empty)
  IntVec min_exponents() const {
    IntVec m(static_cast<size_t>(dim_), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)c;
      for (size_t i = 0; i < e.size(); ++i)
        m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  int32_t sup_norm() const {
    int32_t m = 0;
    for (const auto& [e, c] : terms_) {
      (void)c;
      m = std::max(m, ivec_sup_norm(e));
    }
    return m;
  }

  // canonical text: terms in lexicographic exponent order, e.g.
  // "(-1/2) + z1 + z2^-1"
  std::string to_string(std::string_view varbase = "z") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      std::string mono = monomial_string(e, varbase);
      std::string cs = coeff_to_string(c);
      bool bare = coeff_renders_bare(c);
      if (mono.empty()) {
        out += bare ? cs : "(" + cs + ")";
      } else if (coeff_is_one(c)) {
        out += mono;
      } else {
        out += (bare ? cs : "(" + cs + ")") + "*" + mono;
      }
    }
    return out;
  }

  static std::string monomial_string(const IntVec& e, std::string_view varbase) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += std::string(varbase) + std::to_string(i + 1);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

private:
  void check_dim(const IntVec& e) const {
    if (static_cast<int>(e.size()) != dim_)
      throw std::invalid_argument("exponent vector has wrong dimension");
  }
  void check_same(const Laurent& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("laurent dimension mismatch");
  }
  int dim_ = 0;
  std::map<IntVec, C> terms_;
};

template <class D, class C, class Fn>
Laurent<D> map_laurent(const Laurent<C>& f, Fn&& fn) {
  Laurent<D> r(f.dim());
  for (const auto& [e, c] : f.terms()) r.add_term(e, fn(c));
  return r;
}

// Exact division in the Laurent ring; throws EngineError when not exact.
// Works by shifting both operands into the polynomial cone and cancelling
// lexicographic leading terms, which is valid over any integral domain.
template <class C>
Laurent<C> laurent_divide_exact(const Laurent<C>& f, const Laurent<C>& g) {
  if (g.is_zero()) throw std::invalid_argument("laurent division by zero");
  Laurent<C> quot(f.dim());
  if (f.is_zero()) return quot;
  IntVec sf = f.min_exponents(), sg = g.min_exponents();
  Laurent<C> num = f.shifted(ivec_neg(sf));
  Laurent<C> den = g.shifted(ivec_neg(sg));
  IntVec shift = ivec_sub(sf, sg);
  while (!num.is_zero()) {
    cancel::checkpoint();
    // lexicographic leading terms (largest exponent vector)
    auto nlt = std::prev(num.terms().end());
    auto dlt = std::prev(den.terms().end());
    IntVec e = ivec_sub(nlt->first, dlt->first);
    for (int32_t x : e)
      if (x < 0) throw EngineError("inexact laurent division");
    C c = coeff_divide_exact(nlt->second, dlt->second);
    Laurent<C> t = Laurent<C>::monomial(f.dim(), e, c);
    quot = quot + t;
    num = num - t * den;
  }
  return quot.shifted(shift);
}

template <class C>
C laurent_constant_term(const Laurent<C>& f, C zero) {
  auto it = f.terms().find(IntVec(static_cast<size_t>(f.dim()), 0));
  return it == f.terms().end() ? zero : it->second;
}

// Evaluation at a rational point (z may have negative exponents, so every
// coordinate must be nonzero).
inline Rat evaluate(const Laurent<Rat>& f, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) != f.dim())
    throw std::invalid_argument("evaluation point has wrong dimension");
  auto power = [](const Rat& base, int32_t e) {
    if (e == 0) return Rat(1);
    if (rat_is_zero(base)) throw std::invalid_argument("zero coordinate in evaluation");
    Rat b = e > 0 ? base : Rat(1) / base;
    Rat acc(1);
    for (int32_t k = 0; k < (e > 0 ? e : -e); ++k) acc *= b;
    return acc;
  };
  Rat sum(0);
  for (const auto& [e, c] : f.terms()) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) t *= power(point[i], e[i]);
    sum += t;
  }
  return sum;
}

}  // namespace flatband
