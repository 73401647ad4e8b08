#include "boolspec/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace boolspec {

namespace {

void check_shape(unsigned n, std::size_t entries) {
  if (n < 1 || n > kMaxArity) {
    throw std::invalid_argument("spectrum arity must be in [1, " +
                                std::to_string(kMaxArity) + "]");
  }
  if (entries != (std::size_t{1} << n)) {
    throw std::invalid_argument("spectrum must hold exactly 2^n coefficients");
  }
}

}  // namespace

FourierSpectrum FourierSpectrum::exact(unsigned n,
                                       std::vector<std::int64_t> numerators) {
  check_shape(n, numerators.size());
  FourierSpectrum s;
  s.n_ = n;
  s.kind_ = SpectrumKind::Exact;
  s.numerators_ = std::move(numerators);
  return s;
}

FourierSpectrum FourierSpectrum::dense(unsigned n,
                                       std::vector<double> coefficients) {
  check_shape(n, coefficients.size());
  FourierSpectrum s;
  s.n_ = n;
  s.kind_ = SpectrumKind::Float;
  s.values_ = std::move(coefficients);
  return s;
}

double FourierSpectrum::value(SubsetMask mask) const {
  if (kind_ == SpectrumKind::Exact) {
    return std::ldexp(static_cast<double>(numerators_.at(mask)),
                      -static_cast<int>(n_));
  }
  return values_.at(mask);
}

std::int64_t FourierSpectrum::numerator(SubsetMask mask) const {
  if (kind_ != SpectrumKind::Exact) {
    throw std::logic_error("numerator() requires an Exact spectrum");
  }
  return numerators_.at(mask);
}

double FourierSpectrum::parseval_sum() const {
  double sum = 0.0;
  for (SubsetMask m = 0; m < size(); ++m) {
    const double v = value(m);
    sum += v * v;
  }
  return sum;
}

bool FourierSpectrum::parseval_exact() const {
  if (kind_ != SpectrumKind::Exact) {
    throw std::logic_error("parseval_exact() requires an Exact spectrum");
  }
  // sum of (p/2^n)^2 == 1  <=>  sum of p^2 == 4^n
  std::int64_t sum = 0;
  for (const auto p : numerators_) sum += p * p;
  return sum == (std::int64_t{1} << (2 * n_));
}

}  // namespace boolspec
