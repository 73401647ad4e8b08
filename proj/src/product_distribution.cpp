#include "boolspec/product_distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace boolspec {

ProductDistribution::ProductDistribution(std::vector<double> mu)
    : mu_(std::move(mu)) {
  if (mu_.empty() || mu_.size() > kMaxArity) {
    throw std::invalid_argument("distribution arity must be in [1, " +
                                std::to_string(kMaxArity) + "]");
  }
  sigma_.reserve(mu_.size());
  p_pos_.reserve(mu_.size());
  p_neg_.reserve(mu_.size());
  uniform_ = true;
  for (const double m : mu_) {
    if (!(std::abs(m) < 1.0)) {  // also rejects NaN
      throw std::invalid_argument("every mean must satisfy |mu_i| < 1");
    }
    sigma_.push_back(std::sqrt(1.0 - m * m));
    p_pos_.push_back((1.0 + m) / 2.0);
    p_neg_.push_back((1.0 - m) / 2.0);
    uniform_ = uniform_ && m == 0.0;
  }
}

ProductDistribution ProductDistribution::uniform(unsigned n) {
  return ProductDistribution(std::vector<double>(n, 0.0));
}

double ProductDistribution::point_probability(AssignmentIndex k) const {
  if (k >= (AssignmentIndex{1} << arity())) {
    throw std::invalid_argument("assignment index out of range");
  }
  double p = 1.0;
  for (unsigned j = 0; j < arity(); ++j) {
    p *= ((k >> j) & 1u) != 0 ? p_pos_[j] : p_neg_[j];
  }
  return p;
}

std::vector<double> ProductDistribution::assignment_probabilities() const {
  std::vector<double> table(std::size_t{1} << arity(), 0.0);
  table[0] = 1.0;
  for (unsigned j = 0; j < arity(); ++j) {
    const std::size_t block = std::size_t{1} << j;
    for (std::size_t k = 0; k < block; ++k) {
      table[k + block] = table[k] * p_pos_[j];
      table[k] *= p_neg_[j];
    }
  }
  return table;
}

}  // namespace boolspec
