#pragma once

#include <span>
#include <string>
#include <vector>

namespace boolspec {

/// One sample of the mutual-information surface over the feasible
/// coefficient region. Boundary rows carry the witness pair of the binding
/// constraint; interior rows have a = b = 0.
struct SurfaceRow {
  double f0 = 0;
  double f1 = 0;
  double mi = 0;
  bool on_boundary = false;
  int boundary_a = 0;
  int boundary_b = 0;
};

/// Samples the continuous feasible region on a resolution x resolution grid:
/// f0 runs over [-1,1] and, per slice, f1 runs over its feasible interval
/// endpoints included, so the canalizing boundary is always sampled exactly.
/// Grids are generated symmetrically where the interval is symmetric, making
/// the uniform-case f1 <-> -f1 symmetry exact. resolution >= 2.
std::vector<SurfaceRow> mi_surface(double mu_i, int resolution);

/// Samples only the dyadic coefficient lattice of step 2^(1-n) achievable by
/// n-input functions under uniform inputs, intersected with the feasible
/// region for the given mu_i. n <= 10.
std::vector<SurfaceRow> mi_surface_quantized(double mu_i, unsigned n);

/// CSV with header `f0,f1,mi,on_boundary`, 17 significant digits.
std::string surface_csv(std::span<const SurfaceRow> rows);

}  // namespace boolspec
