#pragma once

#include <map>
#include <string>
#include <vector>

#include "flatband/numberfield.hpp"
#include "flatband/polymatrix.hpp"

namespace flatband {

// Module monomial: component index plus exponent vector (exponents >= 0).
struct TermKey {
  int32_t pos = 0;
  IntVec exp;
  bool operator==(const TermKey& o) const { return pos == o.pos && exp == o.exp; }
};

// Graded reverse lexicographic on the exponents, extended position-over-term:
// positions are compared first and a lower index wins.
bool term_greater(const TermKey& a, const TermKey& b);

struct TermGreaterCmp {
  bool operator()(const TermKey& a, const TermKey& b) const { return term_greater(a, b); }
};

// Element of the free module k[z_1..z_d]^r over a number field k, stored
// leading-term-first under the module order.
class ModVec {
public:
  ModVec() = default;
  ModVec(int rank, int dim) : rank_(rank), dim_(dim) {}

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<TermKey, NFElem, TermGreaterCmp>& terms() const { return t_; }

  const TermKey& leading_term() const { return t_.begin()->first; }
  const NFElem& leading_coeff() const { return t_.begin()->second; }

  void add_term(int pos, const IntVec& exp, const NFElem& c);

  ModVec operator+(const ModVec& o) const;
  ModVec operator-(const ModVec& o) const;
  ModVec scaled(const NFElem& c) const;
  // this - c * z^e * g
  ModVec axpy_monomial(const NFElem& c, const IntVec& e, const ModVec& g) const;
  ModVec monic() const;
  bool operator==(const ModVec& o) const { return rank_ == o.rank_ && t_ == o.t_; }

  Laurent<NFElem> component(int pos) const;
  static ModVec from_components(const std::vector<Laurent<NFElem>>& comps);
  std::vector<Laurent<NFElem>> to_components() const;

  // width of the support: max over terms of |exp|_inf
  int32_t sup_norm() const;

  std::string to_string() const;  // "(p1, p2, ..., pr)" in canonical text

private:
  int rank_ = 0, dim_ = 0;
  std::map<TermKey, NFElem, TermGreaterCmp> t_;
};

struct GroebnerBasis {
  std::vector<ModVec> gens;  // reduced: minimal, tail-reduced, monic
  int ambient_rank = 0;
  int dim = 0;
};

// Full multivariate division: returns the remainder; when `quotients` is
// non-null it receives one scalar polynomial per divisor such that
// f = sum quotients[k] * divisors[k] + remainder.
ModVec normal_form(const ModVec& f, const std::vector<ModVec>& divisors,
                   std::vector<Laurent<NFElem>>* quotients = nullptr);

// Reduced Groebner basis of the submodule generated by gens (deterministic:
// normal pair-selection strategy, ties by input index).
GroebnerBasis buchberger(const std::vector<ModVec>& gens);

ModVec normal_form(const ModVec& f, const GroebnerBasis& gb);

// Generating set of {(g_1..g_r) : sum g_i f_i = 0}, by Schreyer-style lifting
// of the S-pair reductions. Every returned syzygy is verified against the
// input exactly; failures raise EngineError. The field is taken from the
// generators when not supplied.
std::vector<ModVec> syzygies(const std::vector<ModVec>& gens,
                             const FieldPtr& field_hint = nullptr);

// sum over terms of p of (coeff * z^exp * f)
ModVec modvec_poly_mul(const ModVec& f, const Laurent<NFElem>& p);

// Drops generators that lie in the submodule generated by the others.
std::vector<ModVec> minimize_generators(std::vector<ModVec> gens);

// Generating set of {v in k[z]^cols : M v = 0} for a polynomial matrix
// (exponents >= 0); computed as the syzygy module of the columns. Every
// generator is verified to satisfy M v = 0 exactly.
std::vector<ModVec> kernel_of_map(const PolyMatrix<NFElem>& m, const FieldPtr& field);

// helpers shared with the resolution layer
ModVec matrix_column(const PolyMatrix<NFElem>& m, int col);
std::vector<Laurent<NFElem>> apply_matrix(const PolyMatrix<NFElem>& m,
                                          const ModVec& v, const FieldPtr& field);

}  // namespace flatband
