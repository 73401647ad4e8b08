#include "boolspec/canalize.hpp"

#include <cmath>
#include <stdexcept>

namespace boolspec {

namespace {

constexpr double kFloatConditionTolerance = 1e-9;
constexpr double kBoundarySlack = 1e-12;

void check_pm1(int v, const char* what) {
  if (v != -1 && v != +1) {
    throw std::invalid_argument(std::string(what) + " must be -1 or +1");
  }
}

int sign_or_zero(double x) { return x > 0 ? +1 : (x < 0 ? -1 : 0); }

}  // namespace

CanalizingReport detect(const TruthTable& tt) {
  const unsigned n = tt.arity();
  CanalizingReport report{n, {}};
  report.variables.reserve(n);
  for (unsigned variable = 1; variable <= n; ++variable) {
    VariableReport vr{variable, false, {}};
    for (const int a : {-1, +1}) {
      const bool want_bit = a > 0;
      bool constant = true;
      int forced = 0;
      for (AssignmentIndex k = 0; k < tt.size() && constant; ++k) {
        if ((((k >> (variable - 1)) & 1u) != 0) != want_bit) continue;
        const int out = tt.evaluate(k);
        if (forced == 0) {
          forced = out;
        } else if (out != forced) {
          constant = false;
        }
      }
      if (constant && forced != 0) {
        vr.witnesses.push_back(Witness{a, forced});
      }
    }
    vr.canalizing = !vr.witnesses.empty();
    report.variables.push_back(std::move(vr));
  }
  return report;
}

bool check_spectral_condition(const FourierSpectrum& s, unsigned variable,
                              int a, int b, const ProductDistribution& d) {
  check_pm1(a, "a");
  check_pm1(b, "b");
  if (variable < 1 || variable > s.arity() || s.arity() != d.arity()) {
    throw std::invalid_argument("variable/arity mismatch");
  }
  const SubsetMask singleton = SubsetMask{1} << (variable - 1);
  if (s.kind() == SpectrumKind::Exact) {
    if (!d.is_uniform()) {
      throw std::invalid_argument(
          "exact spectra arise under the uniform distribution only");
    }
    // chi_{i}(a) = a, so the condition is integral: p0 + a*p1 == b*2^n.
    const std::int64_t p0 = s.numerator(0);
    const std::int64_t p1 = s.numerator(singleton);
    return p0 + a * p1 == static_cast<std::int64_t>(b) *
                              (std::int64_t{1} << s.arity());
  }
  const double phi = (static_cast<double>(a) - d.mu(variable)) / d.sigma(variable);
  return std::abs(s.value(0) + s.value(singleton) * phi -
                  static_cast<double>(b)) <= kFloatConditionTolerance;
}

int uniform_b(const FourierSpectrum& s) {
  if (s.kind() == SpectrumKind::Exact) {
    const std::int64_t p0 = s.numerator(0);
    if (p0 == 0) {
      throw std::domain_error(
          "canalized value is ambiguous: the mean coefficient is 0");
    }
    return p0 > 0 ? +1 : -1;
  }
  const double f0 = s.value(0);
  if (std::abs(f0) < kBoundarySlack) {
    throw std::domain_error(
        "canalized value is ambiguous: the mean coefficient is 0");
  }
  return f0 > 0 ? +1 : -1;
}

CanalizingParams optimal_params(double f0, double mu_i) {
  if (std::abs(f0) > 1.0 + kBoundarySlack || !(std::abs(mu_i) < 1.0)) {
    throw std::invalid_argument("need |f0| <= 1 and |mu_i| < 1");
  }
  if (f0 == 0.0 && mu_i == 0.0) {
    throw std::domain_error("optimal witness is ambiguous at f0 = 0, mu = 0");
  }
  CanalizingParams p{+1, +1, false, false};
  if (std::abs(f0) >= std::abs(mu_i)) {
    p.a = sign_or_zero(mu_i);
    p.b = sign_or_zero(f0);  // nonzero here: f0 = 0 would force mu = 0
    if (p.a == 0) {          // uniform: both restrictive values tie
      p.a = +1;
      p.a_tied = true;
    }
  } else {
    p.a = -sign_or_zero(mu_i);
    p.b = -sign_or_zero(f0);
    if (p.b == 0) {  // f0 = 0: both canalized values yield equal MI
      p.b = +1;
      p.b_tied = true;
    }
  }
  return p;
}

std::vector<Witness> feasible_pairs(double f0, double mu_i) {
  if (std::abs(f0) > 1.0 + kBoundarySlack || !(std::abs(mu_i) < 1.0)) {
    throw std::invalid_argument("need |f0| <= 1 and |mu_i| < 1");
  }
  const double am = std::abs(mu_i);
  std::vector<Witness> pairs;
  auto add = [&pairs](int a, int b) {
    const Witness w{a, b};
    for (const auto& p : pairs) {
      if (p == w) return;
    }
    pairs.push_back(w);
  };
  if (f0 <= -am + kBoundarySlack) {
    add(+1, -1);
    add(-1, -1);
  }
  if (mu_i != 0.0 && std::abs(f0) <= am + kBoundarySlack) {
    const int a = mu_i > 0 ? -1 : +1;
    add(a, +1);
    add(a, -1);
  }
  if (f0 >= am - kBoundarySlack) {
    add(+1, +1);
    add(-1, +1);
  }
  return pairs;
}

TruthTable construct_canalizing(unsigned n, unsigned variable, int a, int b,
                                const TruthTable& rest) {
  check_pm1(a, "a");
  check_pm1(b, "b");
  if (n < 2 || variable < 1 || variable > n) {
    throw std::invalid_argument("need n >= 2 and 1 <= variable <= n");
  }
  if (rest.arity() != n - 1) {
    throw std::invalid_argument("rest must have arity n - 1");
  }
  TruthTable tt(n);
  const AssignmentIndex low_mask = (AssignmentIndex{1} << (variable - 1)) - 1;
  for (AssignmentIndex k = 0; k < tt.size(); ++k) {
    const bool fixed = (((k >> (variable - 1)) & 1u) != 0) == (a > 0);
    if (fixed) {
      tt.set(k, b);
    } else {
      const AssignmentIndex rk = ((k >> variable) << (variable - 1)) | (k & low_mask);
      tt.set(k, rest.evaluate(rk));
    }
  }
  return tt;
}

}  // namespace boolspec
