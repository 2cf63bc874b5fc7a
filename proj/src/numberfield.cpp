#include "flatband/numberfield.hpp"

#include <cassert>
#include <stdexcept>

#include "flatband/common.hpp"

namespace flatband {

NumberField::NumberField(UniPoly minpoly) : minpoly_(std::move(minpoly)) {
  if (minpoly_.degree() < 1) throw std::invalid_argument("minpoly must be nonconstant");
  if (minpoly_.leading() != 1) throw std::invalid_argument("minpoly must be monic");
}

Rat NumberField::generator_value() const {
  if (!is_rational())
    throw std::invalid_argument("generator of a proper extension is not rational");
  return -minpoly_.coeff(0);
}

FieldPtr make_field(UniPoly minpoly) {
  return std::make_shared<NumberField>(std::move(minpoly));
}

const FieldPtr& rational_field() {
  static const FieldPtr q = make_field(UniPoly::variable());
  return q;
}

const FieldPtr& NFElem::join(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b && !(a->minpoly() == b->minpoly()))
    throw std::invalid_argument("number field mismatch");
  return a;
}

NFElem NFElem::zero(const FieldPtr& f) { return NFElem(f, UniPoly()); }
NFElem NFElem::one(const FieldPtr& f) { return NFElem(f, UniPoly(Rat(1))); }

NFElem NFElem::from_rational(const FieldPtr& f, Rat value) {
  return NFElem(f, UniPoly(std::move(value)));
}

NFElem NFElem::from_poly(const FieldPtr& f, const UniPoly& rep) {
  assert(f);
  auto [q, r] = UniPoly::divmod(rep, f->minpoly());
  (void)q;
  return NFElem(f, std::move(r));
}

NFElem NFElem::generator(const FieldPtr& f) {
  return from_poly(f, UniPoly::variable());
}

Rat NFElem::rational_value() const {
  if (!is_rational()) throw std::invalid_argument("element is not rational");
  return rep_.coeff(0);
}

NFElem NFElem::operator+(const NFElem& o) const {
  return NFElem(join(field_, o.field_), rep_ + o.rep_);
}

NFElem NFElem::operator-(const NFElem& o) const {
  return NFElem(join(field_, o.field_), rep_ - o.rep_);
}

NFElem NFElem::operator*(const NFElem& o) const {
  const FieldPtr& f = join(field_, o.field_);
  UniPoly prod = rep_ * o.rep_;
  if (!f || prod.degree() < f->degree()) return NFElem(f, std::move(prod));
  auto [q, r] = UniPoly::divmod(prod, f->minpoly());
  (void)q;
  return NFElem(f, std::move(r));
}

NFElem NFElem::operator-() const { return NFElem(field_, -rep_); }

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero field element");
  assert(field_);
  // extended euclid: u*rep + v*minpoly = g, g a nonzero constant
  UniPoly r0 = rep_, r1 = field_->minpoly();
  UniPoly u0(Rat(1)), u1;
  while (!r1.is_zero()) {
    auto [q, r2] = UniPoly::divmod(r0, r1);
    UniPoly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.degree() != 0)
    throw EngineError("minpoly not irreducible: gcd with representative is nonconstant");
  return from_poly(field_, u0 / r0.coeff(0));
}

// ---------- linear algebra ----------

int nf_rank(NFMatrix& m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    cancel::checkpoint();
    size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    NFElem inv = m[rank][col].inverse();
    for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      NFElem c = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - c * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<std::vector<NFElem>> nf_kernel_basis(NFMatrix m, size_t cols,
                                                 const FieldPtr& field) {
  size_t rows = m.size();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    cancel::checkpoint();
    size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    NFElem inv = m[rank][col].inverse();
    for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      NFElem c = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - c * m[rank][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++rank;
  }
  std::vector<std::vector<NFElem>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<NFElem> v(cols, NFElem::zero(field));
    v[free_col] = NFElem::one(field);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[static_cast<size_t>(pivot_col_of_row[r])] = -m[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool nf_solvable(const NFMatrix& a, const std::vector<NFElem>& b) {
  NFMatrix plain = a;
  NFMatrix augmented = a;
  for (size_t i = 0; i < a.size(); ++i) augmented[i].push_back(b[i]);
  return nf_rank(plain) == nf_rank(augmented);
}

}  // namespace flatband
