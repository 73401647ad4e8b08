#pragma once

#include <optional>

#include "boolspec/product_distribution.hpp"
#include "boolspec/truth_table.hpp"

namespace boolspec {

/// Slack absorbing float noise when a probability argument sits exactly on
/// the boundary of [0,1].
inline constexpr double kFeasibilitySlack = 1e-12;

/// Binary entropy in bits, with the convention 0*log 0 = 0 (used throughout;
/// h is evaluated at 0 and 1 on the canalizing boundary). Arguments outside
/// [0,1] by more than kFeasibilitySlack throw std::invalid_argument.
double binary_entropy(double p);

enum class MIMethod { Brute, Spectral };

/// Mutual information between one input variable and the function output,
/// together with the coefficient pair that determined it.
struct MIResult {
  double mi;  // bits, in [0,1]
  double f0;  // mean coefficient
  double f1;  // first-order coefficient of the variable
  int variable;  // 1-based; 0 when not tied to a concrete variable
  MIMethod method;
};

/// H(f(X)) - H(f(X)|X_i) by direct summation of the joint distribution over
/// all 2^n assignments. This is the oracle path; it never touches spectral
/// identities (the f0/f1 fields are plain expectations of f and f*phi_i).
MIResult mi_brute(const TruthTable& tt, const ProductDistribution& d,
                  unsigned variable);

/// Mutual information from the two relevant coefficients:
///   h((1+f0)/2) - sum_{a in {-1,+1}} P(X_i=a) h((1 + f0 + f1*phi_i(a))/2).
/// Throws std::domain_error if an entropy argument leaves [0,1] by more than
/// kFeasibilitySlack (infeasible coefficient pair).
MIResult mi_spectral(double f0, double f1, double mu_i, int variable = 0);

/// Mutual information of a uniform-case canalizing function with mean
/// coefficient f0: h((1+f0)/2) - h(|f0|)/2. Independent of the witness and
/// continuous at f0 = 0 (where it equals the dictator value 1).
double mi_canalizing_uniform(double f0);

/// Mutual information on the canalizing boundary under a product measure:
///   h((1+f0)/2) - P(X_i=-a) * h((1 + f0 + (b-f0)*phi_i(-a)/phi_i(a))/2),
/// i.e. mi_spectral at f1 = (b-f0)/phi_i(a). Throws std::domain_error when
/// (a,b) is not in feasible_pairs(f0, mu_i).
double boundary_mi_product(double f0, double mu_i, int a, int b);

/// Conditional output entropies H(f(X)|X_i) of the four boundary witness
/// branches:
///   s = P(X_i=-1) h((f0-mu)/(1-mu))   witness (a,b) = (+1,+1)
///   t = P(X_i=+1) h((f0+mu)/(1+mu))   witness (-1,+1)
///   q = P(X_i=-1) h((f0+1)/(1-mu))    witness (+1,-1)
///   r = P(X_i=+1) h((f0+1)/(1+mu))    witness (-1,-1)
/// A branch whose entropy argument leaves [0,1] is reported as nullopt
/// rather than raising.
struct BranchEntropies {
  std::optional<double> s, t, q, r;
};

BranchEntropies qrst(double f0, double mu_i);

/// Derivatives of s,t,q,r with respect to f0, in bits. Chain rule collapses
/// the weight: P(X_i=-1)/(1-mu) = P(X_i=+1)/(1+mu) = 1/2, so
///   q' = log2((-mu-f0)/(f0+1)) / 2,   r' = log2((mu-f0)/(f0+1)) / 2,
///   s' = log2((1-f0)/(f0-mu)) / 2,    t' = log2((1-f0)/(f0+mu)) / 2.
/// Each is defined only on the strict interior of its branch domain;
/// boundary and singular points are nullopt. Verified against central
/// finite differences of qrst.
BranchEntropies qrst_derivatives(double f0, double mu_i);

}  // namespace boolspec
