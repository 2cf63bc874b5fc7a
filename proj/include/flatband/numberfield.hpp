#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flatband/unipoly.hpp"

namespace flatband {

// Q[mu]/(q) for a monic irreducible q. Rational coefficient fields use a
// degree-1 minpoly (mu - c), so every downstream computation has one code
// path over a number field.
class NumberField {
public:
  explicit NumberField(UniPoly monic_irreducible_minpoly);
  const UniPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  // For degree-1 fields: the rational value of the generator.
  Rat generator_value() const;

private:
  UniPoly minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(UniPoly monic_irreducible_minpoly);
// The rationals as Q[mu]/(mu); one shared instance.
const FieldPtr& rational_field();

// Element of a number field, represented by its residue polynomial of degree
// < deg(minpoly). A default-constructed element is the universal zero: it
// carries no field and combines with elements of any field.
class NFElem {
public:
  NFElem() = default;

  static NFElem zero(const FieldPtr& f);
  static NFElem one(const FieldPtr& f);
  static NFElem from_rational(const FieldPtr& f, Rat value);
  static NFElem from_poly(const FieldPtr& f, const UniPoly& rep);  // reduced mod minpoly
  static NFElem generator(const FieldPtr& f);                      // residue of mu

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }
  bool is_rational() const { return rep_.is_constant(); }
  Rat rational_value() const;  // error when not rational
  const UniPoly& rep() const { return rep_; }
  const FieldPtr& field() const { return field_; }

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator-() const;
  NFElem inverse() const;  // error on zero
  NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
  bool operator==(const NFElem& o) const { return rep_ == o.rep_; }
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  std::string to_string(std::string_view var = "mu") const { return rep_.to_string(var); }

private:
  NFElem(FieldPtr f, UniPoly rep) : field_(std::move(f)), rep_(std::move(rep)) {}
  static const FieldPtr& join(const FieldPtr& a, const FieldPtr& b);
  FieldPtr field_;  // null only for the universal zero
  UniPoly rep_;
};

// --- exact dense linear algebra over a number field ---

using NFMatrix = std::vector<std::vector<NFElem>>;

// Rank by Gaussian elimination with exact field division. Destroys m.
int nf_rank(NFMatrix& m);

inline long nf_nullity(NFMatrix m, size_t cols) {
  return static_cast<long>(cols) - nf_rank(m);
}

// Basis of the right kernel {x : m x = 0}; `cols` is the number of unknowns
// (m may have any number of rows, including zero).
std::vector<std::vector<NFElem>> nf_kernel_basis(NFMatrix m, size_t cols,
                                                 const FieldPtr& field);

// True when a x = b is solvable. Destroys neither input.
bool nf_solvable(const NFMatrix& a, const std::vector<NFElem>& b);

}  // namespace flatband
