#include "boolspec/surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "boolspec/infomeasure.hpp"

namespace boolspec {

namespace {

constexpr double kBoundaryTolerance = 1e-9;
constexpr unsigned kMaxQuantizeArity = 10;

// Inclusive grid over [lo, hi]. A symmetric interval is generated by
// mirroring so that the sample set is exactly closed under negation.
std::vector<double> grid(double lo, double hi, int count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / (count - 1);
  if (lo == -hi) {
    for (int j = 0; j < count / 2; ++j) {
      out[j] = lo + j * step;
      out[count - 1 - j] = -out[j];
    }
    if (count % 2 == 1) out[count / 2] = 0.0;
  } else {
    for (int j = 0; j < count; ++j) out[j] = lo + j * step;
    out[count - 1] = hi;
  }
  return out;
}

struct SliceBounds {
  double lo;
  double hi;
};

// Feasible first-order coefficient interval at a fixed mean coefficient:
// both entropy arguments (1 + f0 + f1*phi(x))/2 must stay in [0,1].
SliceBounds slice_bounds(double f0, double mu, double sigma) {
  const double phi_pos = (1.0 - mu) / sigma;
  const double phi_neg = (-1.0 - mu) / sigma;
  const double lo = std::max(-(1.0 + f0) / phi_pos, (1.0 - f0) / phi_neg);
  const double hi = std::min((1.0 - f0) / phi_pos, -(1.0 + f0) / phi_neg);
  return SliceBounds{lo, hi};
}

SurfaceRow make_row(double f0, double f1, double mu, double sigma) {
  SurfaceRow row;
  row.f0 = f0;
  row.f1 = f1;
  row.mi = mi_spectral(f0, f1, mu).mi;
  for (const int x : {-1, +1}) {
    const double phi = (static_cast<double>(x) - mu) / sigma;
    const double arg = (1.0 + f0 + f1 * phi) / 2.0;
    if (arg >= 1.0 - kBoundaryTolerance) {
      row.on_boundary = true;
      if (row.boundary_a == 0) {
        row.boundary_a = x;
        row.boundary_b = +1;
      }
    } else if (arg <= kBoundaryTolerance) {
      row.on_boundary = true;
      if (row.boundary_a == 0) {
        row.boundary_a = x;
        row.boundary_b = -1;
      }
    }
  }
  return row;
}

void check_mu(double mu_i) {
  if (!(std::abs(mu_i) < 1.0)) {
    throw std::invalid_argument("need |mu_i| < 1");
  }
}

}  // namespace

std::vector<SurfaceRow> mi_surface(double mu_i, int resolution) {
  check_mu(mu_i);
  if (resolution < 2) {
    throw std::invalid_argument("resolution must be at least 2");
  }
  const double sigma = std::sqrt(1.0 - mu_i * mu_i);
  std::vector<SurfaceRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (const double f0 : grid(-1.0, 1.0, resolution)) {
    const SliceBounds bounds = slice_bounds(f0, mu_i, sigma);
    for (const double f1 : grid(bounds.lo, bounds.hi, resolution)) {
      rows.push_back(make_row(f0, f1, mu_i, sigma));
    }
  }
  return rows;
}

std::vector<SurfaceRow> mi_surface_quantized(double mu_i, unsigned n) {
  check_mu(mu_i);
  if (n < 1 || n > kMaxQuantizeArity) {
    throw std::invalid_argument("quantization arity must be in [1, " +
                                std::to_string(kMaxQuantizeArity) + "]");
  }
  const double sigma = std::sqrt(1.0 - mu_i * mu_i);
  const std::int64_t half = std::int64_t{1} << (n - 1);
  std::vector<SurfaceRow> rows;
  for (std::int64_t j0 = -half; j0 <= half; ++j0) {
    const double f0 = std::ldexp(static_cast<double>(j0), 1 - static_cast<int>(n));
    const SliceBounds bounds = slice_bounds(f0, mu_i, sigma);
    for (std::int64_t j1 = -half; j1 <= half; ++j1) {
      const double f1 = std::ldexp(static_cast<double>(j1), 1 - static_cast<int>(n));
      if (f1 < bounds.lo - 1e-12 || f1 > bounds.hi + 1e-12) continue;
      rows.push_back(make_row(f0, std::clamp(f1, bounds.lo, bounds.hi), mu_i,
                              sigma));
    }
  }
  return rows;
}

std::string surface_csv(std::span<const SurfaceRow> rows) {
  std::ostringstream out;
  out << "f0,f1,mi,on_boundary\n";
  char line[160];
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%d\n", row.f0,
                  row.f1, row.mi, row.on_boundary ? 1 : 0);
    out << line;
  }
  return out.str();
}

}  // namespace boolspec
