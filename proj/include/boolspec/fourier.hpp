#pragma once

#include "boolspec/product_distribution.hpp"
#include "boolspec/spectrum.hpp"
#include "boolspec/truth_table.hpp"
#include "boolspec/types.hpp"

namespace boolspec {

/// Reconstructed outputs farther than this from +-1 are rejected by
/// inverse_transform. Far below the 2^-n quantization gap for any n <= 24
/// and far above accumulated rounding error.
inline constexpr double kInverseRoundingTolerance = 1e-6;

/// Biased basis function phi_U(x) = prod_{i in U} (x_i - mu_i)/sigma_i,
/// evaluated at the assignment encoded by k. The empty product is 1.
/// Orthonormal under d; reduces to the parity chi_U for uniform d.
double basis_eval(SubsetMask mask, AssignmentIndex k, const ProductDistribution& d);

/// Biased Fourier transform: coefficient(U) = sum_x P(x) f(x) phi_U(x).
/// Computed by per-variable tensor recursion in O(n*2^n). Exact kind when d
/// is uniform (the halving butterflies are dyadic-exact), Float otherwise.
FourierSpectrum transform(const TruthTable& tt, const ProductDistribution& d);

/// Uniform-case transform via integer butterflies; identical to
/// transform(tt, uniform) but produced in O(n*2^n) integer arithmetic with
/// no rounding anywhere.
FourierSpectrum fast_uniform_transform(const TruthTable& tt);

/// Evaluates f(x) = sum_U coefficient(U) phi_U(x) and rounds to the nearest
/// of {-1,+1}. Throws std::domain_error if any reconstructed value is
/// farther than kInverseRoundingTolerance from +-1 (the spectrum does not
/// describe a Boolean function under d).
TruthTable inverse_transform(const FourierSpectrum& s, const ProductDistribution& d);

}  // namespace boolspec
