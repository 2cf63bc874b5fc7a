#pragma once

#include <map>
#include <string>
#include <vector>

#include "flatband/lattice.hpp"
#include "flatband/numberfield.hpp"
#include "flatband/polymatrix.hpp"

namespace flatband {

// The transformed operator pencil A(z) - mu*D. Working with (A - mu*D)
// instead of the normalized Laplacian pencil keeps everything inside Q[mu]:
// (Delta - lambda)f = 0 iff (A - (1+lambda)D)g = 0 with g = D^{1/2}f, and the
// diagonal substitution preserves supports, kernels and dimension counts.
struct BlochSystem {
  int n = 0;                  // fundamental domain size |W|
  int dim = 0;                // lattice dimension d
  PolyMatrix<Rat> a_hat;      // adjacency symbol; entry (i,j) = sum_m z^{h^m_{i,j}}
  std::vector<int> degrees;   // ambient degrees (diagonal of D)
};

BlochSystem build_bloch(const QuotientGraph& g);

// An eigenvalue class of the infinite operator: one per irreducible factor of
// the coefficient gcd of the characteristic determinant. Conjugate roots
// share a FlatBand; module computations over Q[mu]/(q) are embedding-free.
struct FlatBand {
  UniPoly minpoly_mu;         // irreducible factor q(mu), monic
  UniPoly minpoly_lambda;     // q(lambda + 1), monic
  int multiplicity_in_gcd = 1;
  FieldPtr field;             // Q[mu]/(q)
  NFElem mu;                  // generator residue class
  NFElem lambda;              // mu - 1
  std::vector<RootInterval> mu_roots;  // isolating intervals, ascending
};

// A flat-band "probe" at an arbitrary rational mu0 (used by the truncation
// verifier at non-eigenvalue points).
FlatBand make_rational_band(const Rat& mu0);

// det(A(z) - mu*D), exact, coefficients in Q[mu].
Laurent<UniPoly> char_det(const BlochSystem& b);

// All flat bands: factor the gcd of the z-coefficients of char_det and keep
// the real-rooted irreducible factors, sorted by smallest real root.
std::vector<FlatBand> flat_bands(const BlochSystem& b);

// A(z) - mu*D with mu the residue class of the band's number field.
PolyMatrix<NFElem> specialize(const BlochSystem& b, const FlatBand& band);

// Finite-support eigenfunction of the transformed system, as a table of
// exact values. (The Laplacian eigenfunction is D^{1/2} times this table,
// rescaled per orbit.)
struct EigenfunctionTable {
  std::map<CellVertex, NFElem> entries;
};

// Inversion: the monomial c*z^g in component i becomes the value c at
// CellVertex{cell=g, vertex=i}. Convention: z^g corresponds to cell +g, so
// translation by h is multiplication by z^h.
EigenfunctionTable realize_eigenfunction(const std::vector<Laurent<NFElem>>& v,
                                         const QuotientGraph& g);

// The inverse direction, for round-trip checks and support handling.
std::vector<Laurent<NFElem>> bloch_transform(const EigenfunctionTable& table, int n,
                                             int dim, const FieldPtr& field);

}  // namespace flatband
