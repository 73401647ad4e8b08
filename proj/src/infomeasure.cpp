#include "boolspec/infomeasure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "boolspec/canalize.hpp"

namespace boolspec {

namespace {

// Entropy of an argument already validated (or clamped) into [0,1].
double entropy_clamped(double p) {
  p = std::clamp(p, 0.0, 1.0);
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double check_probability(double p, const char* what) {
  if (!(p >= -kFeasibilitySlack && p <= 1.0 + kFeasibilitySlack)) {
    throw std::domain_error(std::string(what) + " = " + std::to_string(p) +
                            " lies outside [0,1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

double phi_value(int x, double mu, double sigma) {
  return (static_cast<double>(x) - mu) / sigma;
}

// MI values can dip a few ulp below 0 when the output is independent of the
// conditioning variable; snap those to the lower bound.
double snap_mi(double mi) {
  return (mi < 0.0 && mi > -kFeasibilitySlack) ? 0.0 : mi;
}

}  // namespace

double binary_entropy(double p) {
  if (!(p >= -kFeasibilitySlack && p <= 1.0 + kFeasibilitySlack)) {
    throw std::invalid_argument("binary_entropy argument " +
                                std::to_string(p) + " outside [0,1]");
  }
  return entropy_clamped(p);
}

MIResult mi_brute(const TruthTable& tt, const ProductDistribution& d,
                  unsigned variable) {
  if (tt.arity() != d.arity()) {
    throw std::invalid_argument("table arity and distribution arity differ");
  }
  if (variable < 1 || variable > tt.arity()) {
    throw std::invalid_argument("variable out of range");
  }
  const auto prob = d.assignment_probabilities();
  const unsigned j = variable - 1;
  const double p_pos = d.p(variable, +1);
  const double p_neg = d.p(variable, -1);
  const double sigma = d.sigma(variable);
  const double mu = d.mu(variable);

  double py1 = 0.0;       // P(f(X) = +1)
  double py1_pos = 0.0;   // P(f(X) = +1, X_i = +1)
  double f1 = 0.0;        // E[f(X) * phi_i(X_i)]
  for (AssignmentIndex k = 0; k < tt.size(); ++k) {
    const bool one = tt.bit(k);
    const bool pos = ((k >> j) & 1u) != 0;
    if (one) {
      py1 += prob[k];
      if (pos) py1_pos += prob[k];
    }
    const double f = one ? +1.0 : -1.0;
    f1 += prob[k] * f * phi_value(pos ? +1 : -1, mu, sigma);
  }
  const double py1_neg = py1 - py1_pos;

  const double mi = entropy_clamped(py1) -
                    (p_neg * entropy_clamped(py1_neg / p_neg) +
                     p_pos * entropy_clamped(py1_pos / p_pos));
  return MIResult{snap_mi(mi), 2.0 * py1 - 1.0, f1,
                  static_cast<int>(variable), MIMethod::Brute};
}

MIResult mi_spectral(double f0, double f1, double mu_i, int variable) {
  if (!(std::abs(mu_i) < 1.0)) {
    throw std::invalid_argument("need |mu_i| < 1");
  }
  const double sigma = std::sqrt(1.0 - mu_i * mu_i);
  const double marginal = check_probability((1.0 + f0) / 2.0, "(1+f0)/2");
  if (f1 == 0.0) {
    // both conditional entropies equal the marginal entropy identically
    return MIResult{0.0, f0, f1, variable, MIMethod::Spectral};
  }
  double conditional = 0.0;
  for (const int x : {-1, +1}) {
    const double arg = check_probability(
        (1.0 + f0 + f1 * phi_value(x, mu_i, sigma)) / 2.0,
        "conditional entropy argument");
    conditional += (x > 0 ? (1.0 + mu_i) / 2.0 : (1.0 - mu_i) / 2.0) *
                   entropy_clamped(arg);
  }
  return MIResult{snap_mi(entropy_clamped(marginal) - conditional), f0, f1,
                  variable, MIMethod::Spectral};
}

double mi_canalizing_uniform(double f0) {
  if (std::abs(f0) > 1.0 + kFeasibilitySlack) {
    throw std::invalid_argument("need |f0| <= 1");
  }
  f0 = std::clamp(f0, -1.0, 1.0);
  return entropy_clamped((1.0 + f0) / 2.0) - 0.5 * entropy_clamped(std::abs(f0));
}

double boundary_mi_product(double f0, double mu_i, int a, int b) {
  if (a != -1 && a != +1) throw std::invalid_argument("a must be -1 or +1");
  if (b != -1 && b != +1) throw std::invalid_argument("b must be -1 or +1");
  const auto admissible = feasible_pairs(f0, mu_i);
  if (std::find(admissible.begin(), admissible.end(), Witness{a, b}) ==
      admissible.end()) {
    throw std::domain_error("witness (" + std::to_string(a) + "," +
                            std::to_string(b) + ") infeasible at f0 = " +
                            std::to_string(f0));
  }
  const double sigma = std::sqrt(1.0 - mu_i * mu_i);
  const double ratio =
      phi_value(-a, mu_i, sigma) / phi_value(a, mu_i, sigma);
  const double arg = std::clamp(
      (1.0 + f0 + (static_cast<double>(b) - f0) * ratio) / 2.0, 0.0, 1.0);
  const double p_not_a = a > 0 ? (1.0 - mu_i) / 2.0 : (1.0 + mu_i) / 2.0;
  const double f0c = std::clamp(f0, -1.0, 1.0);
  return snap_mi(entropy_clamped((1.0 + f0c) / 2.0) -
                 p_not_a * entropy_clamped(arg));
}

BranchEntropies qrst(double f0, double mu_i) {
  if (!(std::abs(mu_i) < 1.0)) {
    throw std::invalid_argument("need |mu_i| < 1");
  }
  const double p_neg = (1.0 - mu_i) / 2.0;
  const double p_pos = (1.0 + mu_i) / 2.0;
  auto branch = [](double weight, double num,
                   double den) -> std::optional<double> {
    const double u = num / den;
    if (!(u >= -kFeasibilitySlack && u <= 1.0 + kFeasibilitySlack)) {
      return std::nullopt;
    }
    return weight * entropy_clamped(u);
  };
  BranchEntropies out;
  out.s = branch(p_neg, f0 - mu_i, 1.0 - mu_i);
  out.t = branch(p_pos, f0 + mu_i, 1.0 + mu_i);
  out.q = branch(p_neg, f0 + 1.0, 1.0 - mu_i);
  out.r = branch(p_pos, f0 + 1.0, 1.0 + mu_i);
  return out;
}

BranchEntropies qrst_derivatives(double f0, double mu_i) {
  if (!(std::abs(mu_i) < 1.0)) {
    throw std::invalid_argument("need |mu_i| < 1");
  }
  // d/df0 of weight * h(num(f0)/den): the weight over den is always 1/2.
  auto branch = [](double num, double den) -> std::optional<double> {
    if (!(num > 0.0) || !(den > 0.0)) return std::nullopt;
    return 0.5 * std::log2(num / den);
  };
  BranchEntropies out;
  out.s = branch(1.0 - f0, f0 - mu_i);
  out.t = branch(1.0 - f0, f0 + mu_i);
  out.q = branch(-mu_i - f0, f0 + 1.0);
  out.r = branch(mu_i - f0, f0 + 1.0);
  return out;
}

}  // namespace boolspec
