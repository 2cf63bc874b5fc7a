#pragma once

#include <utility>
#include <vector>

#include "flatband/laurent.hpp"

namespace flatband {

// Dense matrix of Laurent polynomials.
template <class C>
struct PolyMatrix {
  int rows = 0, cols = 0, dim = 0;
  std::vector<Laurent<C>> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int d)
      : rows(r), cols(c), dim(d),
        entries(static_cast<size_t>(r) * static_cast<size_t>(c), Laurent<C>(d)) {}

  Laurent<C>& at(int r, int c) {
    return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                   static_cast<size_t>(c)];
  }
  const Laurent<C>& at(int r, int c) const {
    return entries[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                   static_cast<size_t>(c)];
  }

  bool operator==(const PolyMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

template <class C>
PolyMatrix<C> matmul(const PolyMatrix<C>& a, const PolyMatrix<C>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
  PolyMatrix<C> r(a.rows, b.cols, a.dim);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return r;
}

namespace detail {

// cofactor expansion along the row with the most zero entries
template <class C>
Laurent<C> det_cofactor(const PolyMatrix<C>& m, std::vector<int> live_rows,
                        std::vector<int> live_cols) {
  size_t n = live_rows.size();
  if (n == 1) return m.at(live_rows[0], live_cols[0]);
  size_t best = 0, best_zeros = 0;
  for (size_t r = 0; r < n; ++r) {
    size_t zeros = 0;
    for (int c : live_cols)
      if (m.at(live_rows[r], c).is_zero()) ++zeros;
    if (zeros > best_zeros) {
      best_zeros = zeros;
      best = r;
    }
  }
  int row = live_rows[best];
  std::vector<int> sub_rows = live_rows;
  sub_rows.erase(sub_rows.begin() + static_cast<long>(best));
  Laurent<C> acc(m.dim);
  for (size_t k = 0; k < n; ++k) {
    const Laurent<C>& pivot = m.at(row, live_cols[k]);
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols = live_cols;
    sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
    Laurent<C> minor = det_cofactor(m, sub_rows, sub_cols);
    Laurent<C> term = pivot * minor;
    if ((best + k) % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

// fraction-free (Bareiss) determinant; needs exact coefficient division
template <class C>
Laurent<C> det_bareiss(PolyMatrix<C> m, const Laurent<C>& one) {
  int n = m.rows;
  Laurent<C> prev = one;
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    cancel::checkpoint();
    // pivot: fewest terms among nonzero entries of column k below row k-1
    int piv = -1;
    size_t piv_terms = 0;
    for (int i = k; i < n; ++i) {
      const auto& e = m.at(i, k);
      if (e.is_zero()) continue;
      if (piv < 0 || e.term_count() < piv_terms) {
        piv = i;
        piv_terms = e.term_count();
      }
    }
    if (piv < 0) return Laurent<C>(m.dim);  // zero column: det == 0
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Laurent<C> num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = laurent_divide_exact(num, prev);
      }
      m.at(i, k) = Laurent<C>(m.dim);
    }
    prev = m.at(k, k);
  }
  Laurent<C> det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace detail

// Exact determinant: cofactor expansion up to 6x6, Bareiss elimination above.
template <class C>
Laurent<C> determinant(const PolyMatrix<C>& m, const Laurent<C>& one) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows == 0) return one;
  if (m.rows <= 6) {
    std::vector<int> idx(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) idx[static_cast<size_t>(i)] = i;
    return detail::det_cofactor(m, idx, idx);
  }
  return detail::det_bareiss(m, one);
}

// Rank over the fraction field k(z_1..z_d), by fraction-free elimination
// with deterministic pivoting (sparsest entry, lowest row index).
template <class C>
int fraction_field_rank(PolyMatrix<C> m, const Laurent<C>& one) {
  Laurent<C> prev = one;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    cancel::checkpoint();
    int piv = -1;
    size_t piv_terms = 0;
    for (int i = rank; i < m.rows; ++i) {
      const auto& e = m.at(i, col);
      if (e.is_zero()) continue;
      if (piv < 0 || e.term_count() < piv_terms) {
        piv = i;
        piv_terms = e.term_count();
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j) {
        Laurent<C> num = m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j);
        m.at(i, j) = laurent_divide_exact(num, prev);
      }
      m.at(i, col) = Laurent<C>(m.dim);
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

// Clears negative exponents: multiplies every entry by z^P for the smallest
// componentwise shift P; returns the shifted matrix and P.
template <class C>
std::pair<PolyMatrix<C>, IntVec> polynomialize(const PolyMatrix<C>& m) {
  IntVec shift(static_cast<size_t>(m.dim), 0);
  for (const auto& e : m.entries) {
    IntVec mn = e.min_exponents();
    for (size_t i = 0; i < shift.size(); ++i)
      shift[i] = std::max(shift[i], mn[i] < 0 ? -mn[i] : 0);
  }
  PolyMatrix<C> out = m;
  bool nontrivial = false;
  for (int32_t s : shift)
    if (s != 0) nontrivial = true;
  if (nontrivial)
    for (auto& e : out.entries) e = e.shifted(shift);
  return {std::move(out), std::move(shift)};
}

}  // namespace flatband
