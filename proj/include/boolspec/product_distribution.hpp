#pragma once

#include <vector>

#include "boolspec/types.hpp"

namespace boolspec {

/// Independent input measure given by per-variable means mu_i in (-1,+1).
/// P(X_i = a) = (1 + a*mu_i)/2 and sigma_i = sqrt(1 - mu_i^2) > 0.
class ProductDistribution {
 public:
  /// Throws std::invalid_argument if empty, longer than kMaxArity, or any
  /// |mu_i| >= 1.
  explicit ProductDistribution(std::vector<double> mu);

  static ProductDistribution uniform(unsigned n);

  unsigned arity() const { return static_cast<unsigned>(mu_.size()); }
  bool is_uniform() const { return uniform_; }

  /// Mean and standard deviation of a 1-based variable.
  double mu(unsigned variable) const { return mu_[variable - 1]; }
  double sigma(unsigned variable) const { return sigma_[variable - 1]; }

  /// P(X_variable = a) for a in {-1,+1}.
  double p(unsigned variable, int a) const {
    return a > 0 ? p_pos_[variable - 1] : p_neg_[variable - 1];
  }

  /// P(X = x) for the assignment encoded by k; the product of the
  /// per-variable factors (1 + x_i*mu_i)/2.
  double point_probability(AssignmentIndex k) const;

  /// Dense table of all 2^n point probabilities, indexed by assignment.
  std::vector<double> assignment_probabilities() const;

  const std::vector<double>& means() const { return mu_; }

 private:
  std::vector<double> mu_;
  std::vector<double> sigma_;
  std::vector<double> p_pos_;
  std::vector<double> p_neg_;
  bool uniform_;
};

}  // namespace boolspec
