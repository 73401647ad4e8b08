#pragma once

#include <vector>

#include "boolspec/product_distribution.hpp"
#include "boolspec/spectrum.hpp"
#include "boolspec/truth_table.hpp"

namespace boolspec {

/// A canalizing witness: fixing x_i = a forces the output to the constant b.
struct Witness {
  int a;  // restrictive input value, -1 or +1
  int b;  // canalized output value, -1 or +1

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VariableReport {
  unsigned variable;  // 1-based
  bool canalizing;
  std::vector<Witness> witnesses;  // empty iff not canalizing
};

struct CanalizingReport {
  unsigned arity;
  std::vector<VariableReport> variables;

  const VariableReport& for_variable(unsigned variable) const {
    return variables.at(variable - 1);
  }
};

/// Checks every variable and every (a,b) pair against the full table:
/// (a,b) is recorded iff all 2^(n-1) completions of x_i = a output b.
/// All witnesses are reported (a constant function has two per variable).
CanalizingReport detect(const TruthTable& tt);

/// Spectral canalization condition: coefficient(empty) +
/// coefficient({i}) * phi_{i}(a) == b. Exact integer test for Exact spectra
/// (d must be uniform), tolerance 1e-9 for Float.
bool check_spectral_condition(const FourierSpectrum& s, unsigned variable,
                              int a, int b, const ProductDistribution& d);

/// Canalized output value in the uniform case: the sign of
/// coefficient(empty). Throws std::domain_error when that coefficient is 0
/// (both signs yield equal mutual information; no silent pick).
int uniform_b(const FourierSpectrum& s);

/// MI-optimal witness choice. A tied flag marks a direction in which both
/// signs achieve the same mutual information (a is tied when mu_i = 0,
/// b is tied when f0 = 0); the tied slot is reported as +1.
struct CanalizingParams {
  int a;
  int b;
  bool a_tied;
  bool b_tied;
};

/// (sgn(mu_i), sgn(f0)) when |f0| >= |mu_i|, else (-sgn(mu_i), -sgn(f0));
/// the tie |f0| = |mu_i| takes the first branch. Throws std::domain_error
/// when f0 = 0 and mu_i = 0 (every direction ties).
CanalizingParams optimal_params(double f0, double mu_i);

/// Witness pairs admissible for a canalizing function with the given mean
/// coefficient, from the Parseval feasibility intervals:
///   f0 in [-1, -|mu|]  ->  (+-1, -1)
///   |f0| <= |mu|       ->  (-sgn(mu), +-1)
///   f0 in [|mu|, 1]    ->  (+-1, +1)
/// Boundary values belong to both adjacent cases. Comparisons carry a 1e-12
/// slack so cluster representatives sitting on a boundary are admitted.
std::vector<Witness> feasible_pairs(double f0, double mu_i);

/// Builds the n-ary table that outputs b wherever x_i = a and follows
/// `rest` (over the remaining n-1 variables, in order) elsewhere.
TruthTable construct_canalizing(unsigned n, unsigned variable, int a, int b,
                                const TruthTable& rest);

}  // namespace boolspec
