#pragma once

#include <cstdint>
#include <vector>

#include "boolspec/types.hpp"

namespace boolspec {

/// Number kind of a spectrum. Exact spectra arise under the uniform
/// distribution, where every coefficient is an integer numerator over 2^n;
/// product-case spectra are Float.
enum class SpectrumKind { Exact, Float };

/// All 2^n Fourier coefficients of a Boolean function, indexed by SubsetMask.
class FourierSpectrum {
 public:
  /// Exact spectrum: coefficient(U) = numerators[U] / 2^n.
  static FourierSpectrum exact(unsigned n, std::vector<std::int64_t> numerators);
  static FourierSpectrum dense(unsigned n, std::vector<double> coefficients);

  unsigned arity() const { return n_; }
  SpectrumKind kind() const { return kind_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }

  /// Coefficient value as a double; exact for Exact kind (dyadic rationals
  /// with |numerator| <= 2^n are representable).
  double value(SubsetMask mask) const;

  /// Exact numerator over 2^n. Throws std::logic_error on Float spectra.
  std::int64_t numerator(SubsetMask mask) const;

  /// Sum of squared coefficients; 1 for any spectrum of a +-1-valued function.
  double parseval_sum() const;

  /// Integer form of the Parseval identity, sum of numerator^2 == 4^n.
  /// Exact spectra only.
  bool parseval_exact() const;

 private:
  FourierSpectrum() = default;

  unsigned n_ = 0;
  SpectrumKind kind_ = SpectrumKind::Float;
  std::vector<double> values_;
  std::vector<std::int64_t> numerators_;
};

}  // namespace boolspec
