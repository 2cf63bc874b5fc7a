#pragma once

// Brute-force oracles used by the test suites. Everything here reduces to
// plain linear algebra over the coefficient field (or to explicit
// permutation sums) and stays independent of the groebner engine it checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "flatband/groebner.hpp"

namespace oracles {

using namespace flatband;

// Determinant as a sum over all n! permutations.
template <class C>
Laurent<C> det_by_permutations(const PolyMatrix<C>& m, const Laurent<C>& one) {
  std::vector<int> perm(static_cast<size_t>(m.rows));
  std::iota(perm.begin(), perm.end(), 0);
  Laurent<C> acc(m.dim);
  do {
    int sign = 1;
    for (size_t a = 0; a < perm.size(); ++a)
      for (size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) sign = -sign;
    Laurent<C> prod = one;
    for (int i = 0; i < m.rows; ++i) prod = prod * m.at(i, perm[static_cast<size_t>(i)]);
    acc = sign > 0 ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// All exponent vectors with every coordinate in [0, cap].
inline std::vector<IntVec> box_monomials(int d, int cap) {
  std::vector<IntVec> out;
  IntVec cur(static_cast<size_t>(d), 0);
  while (true) {
    out.push_back(cur);
    int k = 0;
    while (k < d && cur[static_cast<size_t>(k)] == cap) {
      cur[static_cast<size_t>(k)] = 0;
      ++k;
    }
    if (k == d) break;
    ++cur[static_cast<size_t>(k)];
  }
  return out;
}

// All exponent vectors with total degree <= cap.
inline std::vector<IntVec> total_degree_monomials(int d, int cap) {
  std::vector<IntVec> out;
  for (const IntVec& e : box_monomials(d, cap))
    if (ivec_total(e) <= cap) out.push_back(e);
  return out;
}

// Membership of f in the module generated by gens, with coefficient
// polynomials restricted to total degree <= bound. Solves the coefficient
// linear system directly.
inline bool membership_bounded(const ModVec& f, const std::vector<ModVec>& gens,
                               int bound, const FieldPtr& field) {
  int d = f.dim();
  auto monos = total_degree_monomials(d, bound);
  // row index per (component, exponent)
  std::map<std::pair<int, IntVec>, size_t> row_of;
  auto touch = [&](int pos, const IntVec& e) {
    auto key = std::make_pair(pos, e);
    auto it = row_of.find(key);
    if (it == row_of.end()) row_of.emplace(key, row_of.size());
  };
  for (const auto& g : gens)
    for (const auto& [k, v] : g.terms()) {
      (void)v;
      for (const IntVec& e : monos) touch(k.pos, ivec_add(k.exp, e));
    }
  for (const auto& [k, v] : f.terms()) {
    (void)v;
    touch(k.pos, k.exp);
  }
  size_t rows = row_of.size();
  size_t cols = gens.size() * monos.size();
  NFMatrix a(rows, std::vector<NFElem>(cols, NFElem::zero(field)));
  std::vector<NFElem> b(rows, NFElem::zero(field));
  size_t col = 0;
  for (const auto& g : gens) {
    for (const IntVec& e : monos) {
      for (const auto& [k, v] : g.terms()) {
        size_t r = row_of.at({k.pos, ivec_add(k.exp, e)});
        a[r][col] = a[r][col] + v;
      }
      ++col;
    }
  }
  for (const auto& [k, v] : f.terms()) b[row_of.at({k.pos, k.exp})] = v;
  return nf_solvable(a, b);
}

namespace detail {

// Coefficient system for { v in k[z]^cols : M v = 0, exponents in [0,j]^d }.
// Unknown order: component-major, then box_monomials order.
inline NFMatrix ball_system(const PolyMatrix<NFElem>& m, int j, const FieldPtr& field,
                            std::vector<IntVec>* monos_out) {
  auto monos = box_monomials(m.dim, j);
  std::map<std::pair<int, IntVec>, size_t> row_of;
  for (int i = 0; i < m.rows; ++i)
    for (int c = 0; c < m.cols; ++c)
      for (const auto& [e, v] : m.at(i, c).terms()) {
        (void)v;
        for (const IntVec& mono : monos) {
          auto key = std::make_pair(i, ivec_add(e, mono));
          if (!row_of.count(key)) row_of.emplace(key, row_of.size());
        }
      }
  size_t rows = row_of.size();
  size_t cols = static_cast<size_t>(m.cols) * monos.size();
  NFMatrix a(rows, std::vector<NFElem>(cols, NFElem::zero(field)));
  size_t col = 0;
  for (int c = 0; c < m.cols; ++c) {
    for (const IntVec& mono : monos) {
      for (int i = 0; i < m.rows; ++i)
        for (const auto& [e, v] : m.at(i, c).terms())
          a[row_of.at({i, ivec_add(e, mono)})][col] =
              a[row_of.at({i, ivec_add(e, mono)})][col] + v;
      ++col;
    }
  }
  if (monos_out) *monos_out = std::move(monos);
  return a;
}

}  // namespace detail

// dim_k { v in k[z]^cols : M v = 0 and every exponent of v lies in [0, j] }.
// This is the exact ball dimension |B(ker M, j)| for the sup-norm width.
inline long kernel_ball_dim(const PolyMatrix<NFElem>& m, int j, const FieldPtr& field) {
  std::vector<IntVec> monos;
  NFMatrix a = detail::ball_system(m, j, field, &monos);
  long cols = static_cast<long>(static_cast<size_t>(m.cols) * monos.size());
  return cols - nf_rank(a);
}

// Basis of that ball, as module elements (for completeness checks).
inline std::vector<ModVec> kernel_ball_basis(const PolyMatrix<NFElem>& m, int j,
                                             const FieldPtr& field) {
  std::vector<IntVec> monos;
  NFMatrix a = detail::ball_system(m, j, field, &monos);
  size_t cols = static_cast<size_t>(m.cols) * monos.size();
  std::vector<ModVec> out;
  for (const auto& coeffs : nf_kernel_basis(std::move(a), cols, field)) {
    ModVec v(m.cols, m.dim);
    size_t col = 0;
    for (int c = 0; c < m.cols; ++c)
      for (const IntVec& mono : monos) v.add_term(c, mono, coeffs[col++]);
    out.push_back(std::move(v));
  }
  return out;
}

// Matrix whose columns are the given module elements.
inline PolyMatrix<NFElem> matrix_from_columns(const std::vector<ModVec>& gens) {
  PolyMatrix<NFElem> m(gens[0].rank(), static_cast<int>(gens.size()), gens[0].dim());
  for (size_t j = 0; j < gens.size(); ++j) {
    auto comps = gens[j].to_components();
    for (int i = 0; i < m.rows; ++i) m.at(i, static_cast<int>(j)) = comps[static_cast<size_t>(i)];
  }
  return m;
}

// Equality up to one monomial shift and one nonzero scalar.
inline bool equal_up_to_monomial_scalar(const ModVec& a, const ModVec& b) {
  if (a.rank() != b.rank() || a.term_count() != b.term_count()) return false;
  if (a.is_zero()) return true;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  IntVec shift = ivec_sub(ita->first.exp, itb->first.exp);
  NFElem scale = ita->second / itb->second;
  for (; ita != a.terms().end(); ++ita, ++itb) {
    if (ita->first.pos != itb->first.pos) return false;
    if (ivec_sub(ita->first.exp, itb->first.exp) != shift) return false;
    if (!(ita->second == itb->second * scale)) return false;
  }
  return true;
}

}  // namespace oracles
