#include "boolspec/fourier.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace boolspec {

namespace {

void check_arity(unsigned table_arity, const ProductDistribution& d) {
  if (table_arity != d.arity()) {
    throw std::invalid_argument("table arity and distribution arity differ");
  }
}

}  // namespace

double basis_eval(SubsetMask mask, AssignmentIndex k,
                  const ProductDistribution& d) {
  if (mask >= (SubsetMask{1} << d.arity())) {
    throw std::invalid_argument("subset mask out of range");
  }
  double value = 1.0;
  for (unsigned j = 0; j < d.arity(); ++j) {
    if (((mask >> j) & 1u) == 0) continue;
    const double x = ((k >> j) & 1u) != 0 ? +1.0 : -1.0;
    value *= (x - d.mu(j + 1)) / d.sigma(j + 1);
  }
  return value;
}

FourierSpectrum transform(const TruthTable& tt, const ProductDistribution& d) {
  check_arity(tt.arity(), d);
  const unsigned n = tt.arity();
  const std::uint32_t size = tt.size();

  std::vector<double> vals(size);
  for (AssignmentIndex k = 0; k < size; ++k) {
    vals[k] = static_cast<double>(tt.evaluate(k));
  }

  // One 2-point pass per variable: leaves holding partial expectations of
  // g(x_j, rest) are replaced by the coefficients of {1, phi_j}:
  //   c0 = E[g], c1 = E[g * phi_j].
  // In the uniform case this is the halving butterfly (g_pos +- g_neg)/2,
  // which is exact in binary floating point.
  for (unsigned j = 0; j < n; ++j) {
    const double pn = d.p(j + 1, -1);
    const double pp = d.p(j + 1, +1);
    const double phin = (-1.0 - d.mu(j + 1)) / d.sigma(j + 1);
    const double phip = (+1.0 - d.mu(j + 1)) / d.sigma(j + 1);
    const std::uint32_t stride = std::uint32_t{1} << j;
    for (std::uint32_t base = 0; base < size; base += 2 * stride) {
      for (std::uint32_t off = 0; off < stride; ++off) {
        const std::uint32_t lo = base + off;       // x_j = -1
        const std::uint32_t hi = lo + stride;      // x_j = +1
        const double gn = vals[lo];
        const double gp = vals[hi];
        vals[lo] = pn * gn + pp * gp;
        vals[hi] = pn * gn * phin + pp * gp * phip;
      }
    }
  }

  if (!d.is_uniform()) {
    return FourierSpectrum::dense(n, std::move(vals));
  }
  std::vector<std::int64_t> numerators(size);
  for (SubsetMask m = 0; m < size; ++m) {
    const double scaled = std::ldexp(vals[m], static_cast<int>(n));
    numerators[m] = std::llround(scaled);
    if (static_cast<double>(numerators[m]) != scaled) {
      throw std::logic_error("uniform transform produced a non-dyadic value");
    }
  }
  return FourierSpectrum::exact(n, std::move(numerators));
}

FourierSpectrum fast_uniform_transform(const TruthTable& tt) {
  const unsigned n = tt.arity();
  const std::uint32_t size = tt.size();

  std::vector<std::int64_t> a(size);
  for (AssignmentIndex k = 0; k < size; ++k) a[k] = tt.evaluate(k);

  // Integer butterflies accumulating sum_x f(x) chi_U(x). With bit 0
  // encoding x_j = -1 the pair map is (lo, hi) -> (lo + hi, hi - lo).
  for (unsigned j = 0; j < n; ++j) {
    const std::uint32_t stride = std::uint32_t{1} << j;
    for (std::uint32_t base = 0; base < size; base += 2 * stride) {
      for (std::uint32_t off = 0; off < stride; ++off) {
        const std::uint32_t lo = base + off;
        const std::uint32_t hi = lo + stride;
        const std::int64_t u = a[lo];
        const std::int64_t v = a[hi];
        a[lo] = u + v;
        a[hi] = v - u;
      }
    }
  }
  return FourierSpectrum::exact(n, std::move(a));
}

TruthTable inverse_transform(const FourierSpectrum& s,
                             const ProductDistribution& d) {
  check_arity(s.arity(), d);
  const unsigned n = s.arity();
  const std::uint32_t size = s.size();

  std::vector<double> vals(size);
  for (SubsetMask m = 0; m < size; ++m) vals[m] = s.value(m);

  // Inverse of the per-variable pass: g(x_j) = c0 + c1 * phi_j(x_j).
  for (unsigned j = 0; j < n; ++j) {
    const double phin = (-1.0 - d.mu(j + 1)) / d.sigma(j + 1);
    const double phip = (+1.0 - d.mu(j + 1)) / d.sigma(j + 1);
    const std::uint32_t stride = std::uint32_t{1} << j;
    for (std::uint32_t base = 0; base < size; base += 2 * stride) {
      for (std::uint32_t off = 0; off < stride; ++off) {
        const std::uint32_t lo = base + off;
        const std::uint32_t hi = lo + stride;
        const double c0 = vals[lo];
        const double c1 = vals[hi];
        vals[lo] = c0 + c1 * phin;
        vals[hi] = c0 + c1 * phip;
      }
    }
  }

  TruthTable tt(n);
  for (AssignmentIndex k = 0; k < size; ++k) {
    const double v = vals[k];
    const double nearest = v >= 0.0 ? +1.0 : -1.0;
    if (std::abs(v - nearest) > kInverseRoundingTolerance) {
      throw std::domain_error(
          "spectrum does not describe a Boolean function: reconstructed "
          "value " +
          std::to_string(v) + " at assignment " + std::to_string(k));
    }
    tt.set_bit(k, nearest > 0.0);
  }
  return tt;
}

}  // namespace boolspec
