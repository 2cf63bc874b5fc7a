#pragma once

#include <optional>
#include <vector>

#include "flatband/bloch.hpp"
#include "flatband/lattice.hpp"

namespace flatband {

// One row of the Folner convergence report. All entries are exact; there are
// no tolerance parameters anywhere in this module.
struct TruncationRow {
  int j = 0;
  long f_size = 0;              // |F_j| = n (2j+1)^d
  long boundary_size = 0;       // |boundary_{j0} F_j| (vertices)
  long dim_finite_support = 0;  // dim { f eigenfunction : supp f in F_j }
  long shubin_mult = 0;         // eigenvalue multiplicity in the induced graph
  Rat avg_density;              // dim_finite_support / |F_j|
  Rat shubin_density;           // shubin_mult / |F_j|
  Rat bound;                    // |boundary| / |F_j|
};

// j0 = max sup-norm of a support cell after re-centering each generator so
// its coordinatewise minimum cell is 0; floored at 1.
int support_width(const std::vector<EigenfunctionTable>& generators);

// Exact dimension of the lambda-eigenfunctions supported in F_j * W: nullity
// of the transformed system rows at every vertex of F_j and its 1-thick
// boundary (ambient degrees), over the band's number field.
long dim_finite_support_eigs(const QuotientGraph& g, const FlatBand& band, int j);

// Multiplicity of the band's eigenvalue in the finite induced graph on
// F_j and its j0-thick boundary, for that graph's own normalized Laplacian
// (internal degrees).
long shubin_multiplicity(const QuotientGraph& g, const FlatBand& band, int j, int j0);

// One TruncationRow per j. `density` is the syzygy-computed value when
// available; it is not used in the computation, only by callers comparing
// rows against it.
std::vector<TruncationRow> convergence_report(const QuotientGraph& g,
                                              const FlatBand& band,
                                              const std::vector<int>& j_range, int j0);

}  // namespace flatband
