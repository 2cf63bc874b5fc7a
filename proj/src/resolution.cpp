#include "flatband/resolution.hpp"

#include <algorithm>

namespace flatband {

FreeResolution free_resolution(const std::vector<ModVec>& gens, int dim,
                               int stage_bound, const FieldPtr& field) {
  FreeResolution res;
  if (gens.empty()) return res;  // the zero module resolves trivially
  res.target_rank = gens[0].rank();
  std::vector<ModVec> current = gens;
  for (int stage = 0;; ++stage) {
    if (stage > stage_bound)
      throw EngineError("free resolution exceeded the stage bound");
    if (stage > dim) {
      // Hilbert syzygy promises freeness by stage dim with minimal
      // generating sets; minimize and retry before going deeper.
      std::vector<ModVec> smaller = minimize_generators(current);
      if (smaller.size() < current.size()) current = std::move(smaller);
    }
    res.ranks.push_back(static_cast<int>(current.size()));
    res.stages.push_back(current);
    std::vector<ModVec> syz = syzygies(current, field);
    if (syz.empty()) break;
    current = std::move(syz);
  }
  return res;
}

DensityResult compute_density(const PolyMatrix<NFElem>& pencil, const FieldPtr& field,
                              int stage_bound) {
  DensityResult out;
  const int n = pencil.cols;
  std::vector<ModVec> kernel = kernel_of_map(pencil, field);
  if (kernel.empty())
    throw EngineError("zero kernel: the probed value is not a flat-band eigenvalue");
  FreeResolution res = free_resolution(kernel, pencil.dim, stage_bound, field);
  int alternating = 0;
  for (size_t k = 0; k < res.ranks.size(); ++k)
    alternating += (k % 2 == 0) ? res.ranks[k] : -res.ranks[k];
  Laurent<NFElem> one = Laurent<NFElem>::constant(pencil.dim, NFElem::one(field));
  int oracle = n - fraction_field_rank(pencil, one);
  if (alternating != oracle)
    throw EngineError("resolution rank sum disagrees with the rank oracle");
  out.kernel_rank = alternating;
  out.ranks = res.ranks;
  out.generators = std::move(kernel);
  out.density = Rat(alternating, n);
  out.density.canonicalize();
  return out;
}

}  // namespace flatband
