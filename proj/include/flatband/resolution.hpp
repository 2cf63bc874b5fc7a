#pragma once

#include <vector>

#include "flatband/groebner.hpp"

namespace flatband {

// Free resolution 0 -> R^{r_m} -> ... -> R^{r_0} -> M -> 0 of a submodule M
// of R^{target_rank}, as the generator lists of the successive syzygy
// modules. Not required to be minimal; only the alternating rank sum is
// contractual (it is basis-independent by exactness).
struct FreeResolution {
  std::vector<int> ranks;                   // r_0 .. r_m
  std::vector<std::vector<ModVec>> stages;  // stage k: generators of Syz^k(M)
  int target_rank = 0;
};

// Iterates syzygies until they vanish. Termination within dim+1 stages is
// guaranteed with minimization (Hilbert syzygy theorem); past that point the
// last stage is minimized and the iteration continues. Exceeding stage_bound
// raises EngineError (it would signal an engine bug).
FreeResolution free_resolution(const std::vector<ModVec>& gens, int dim,
                               int stage_bound, const FieldPtr& field);

struct DensityResult {
  Rat density;                    // exact: kernel_rank / n
  std::vector<int> ranks;         // resolution ranks of the kernel
  int kernel_rank = 0;            // alternating sum == fraction-field rank of K
  std::vector<ModVec> generators; // kernel generators
  IntVec shift;                   // monomial shift used to clear denominators
};

// Thm-6.1-style density of a flat band from its specialized Bloch pencil
// (polynomial entries, i.e. already shifted). Cross-checked against the
// fraction-field rank oracle on every call; mismatch raises EngineError.
DensityResult compute_density(const PolyMatrix<NFElem>& polynomial_pencil,
                              const FieldPtr& field, int stage_bound);

}  // namespace flatband
