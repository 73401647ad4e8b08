#include "boolspec/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "boolspec/fourier.hpp"
#include "boolspec/infomeasure.hpp"
#include "boolspec/parallel.hpp"
#include "boolspec/truth_table.hpp"

namespace boolspec {

namespace {

constexpr double kClassMergeTolerance = 1e-9;
constexpr double kClassSeparationFloor = 1e-6;
constexpr double kArgmaxTieTolerance = 1e-12;
constexpr double kBoundaryMatchTolerance = 1e-9;
constexpr double kLemmaStrictMargin = 1e-12;
constexpr double kCrossingTolerance = 1e-12;

double entropy_clamped(double p) {
  p = std::clamp(p, 0.0, 1.0);
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

unsigned witness_bit(int a, int b) {
  return (a > 0 ? 2u : 0u) | (b > 0 ? 1u : 0u);
}

void check_scan_arguments(unsigned n, const ProductDistribution& d,
                          unsigned variable) {
  if (n < 1 || n > kMaxEnumerationArity) {
    throw std::invalid_argument(
        "exhaustive scan supports 1 <= n <= " +
        std::to_string(kMaxEnumerationArity) + " (2^(2^n) functions), got " +
        std::to_string(n));
  }
  if (d.arity() != n) {
    throw std::invalid_argument("distribution arity does not match n");
  }
  if (variable < 1 || variable > n) {
    throw std::invalid_argument("variable out of range");
  }
}

// Best boundary MI over the feasible witness pairs, with the pairs tying
// for the maximum.
struct BoundaryOptimum {
  double mi = 0.0;
  std::vector<Witness> pairs;
};

BoundaryOptimum boundary_optimum(double f0, double mu_i) {
  BoundaryOptimum best;
  const auto pairs = feasible_pairs(f0, mu_i);
  std::vector<double> values;
  values.reserve(pairs.size());
  best.mi = -1.0;
  for (const auto& w : pairs) {
    const double v = boundary_mi_product(f0, mu_i, w.a, w.b);
    values.push_back(v);
    best.mi = std::max(best.mi, v);
  }
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (values[idx] >= best.mi - kArgmaxTieTolerance) {
      best.pairs.push_back(pairs[idx]);
    }
  }
  return best;
}

bool witness_hits(std::uint8_t bits, const std::vector<Witness>& pairs) {
  for (const auto& w : pairs) {
    if ((bits >> witness_bit(w.a, w.b)) & 1u) return true;
  }
  return false;
}

// Grid of `points` interior samples of (lo, hi).
double interior_point(double lo, double hi, int points, int j) {
  return lo + (j + 1) * (hi - lo) / (points + 1);
}

}  // namespace

std::uint8_t encode_witnesses(const std::vector<Witness>& witnesses) {
  std::uint8_t bits = 0;
  for (const auto& w : witnesses) bits |= std::uint8_t{1} << witness_bit(w.a, w.b);
  return bits;
}

std::vector<Witness> decode_witnesses(std::uint8_t bits) {
  std::vector<Witness> out;
  for (const int a : {-1, +1}) {
    for (const int b : {-1, +1}) {
      if ((bits >> witness_bit(a, b)) & 1u) out.push_back(Witness{a, b});
    }
  }
  return out;
}

FunctionScan scan_function_space(unsigned n, const ProductDistribution& d,
                                 unsigned variable, int workers) {
  check_scan_arguments(n, d, variable);
  const std::uint32_t table = std::uint32_t{1} << n;
  const std::int64_t function_count = std::int64_t{1} << table;

  FunctionScan scan;
  scan.n = n;
  scan.variable = variable;
  scan.mi.resize(function_count);
  scan.f0.resize(function_count);
  scan.witnesses.resize(function_count);

  const auto prob = d.assignment_probabilities();
  const double p_pos = d.p(variable, +1);
  const double p_neg = d.p(variable, -1);
  std::uint32_t pos_mask = 0;
  for (std::uint32_t k = 0; k < table; ++k) {
    if ((k >> (variable - 1)) & 1u) pos_mask |= std::uint32_t{1} << k;
  }
  const std::uint32_t full_mask =
      table == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << table) - 1;
  const std::uint32_t neg_mask = full_mask & ~pos_mask;

  const int w = worker_count(workers);
  (void)w;
  // Each iteration writes only its own slots, so the result is bitwise
  // identical for every worker count.
#ifdef BOOLSPEC_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(w) if (w > 1)
#endif
  for (std::int64_t fi = 0; fi < function_count; ++fi) {
    const std::uint32_t bits = static_cast<std::uint32_t>(fi);
    double py1 = 0.0;
    double py1_pos = 0.0;
    for (std::uint32_t k = 0; k < table; ++k) {
      if ((bits >> k) & 1u) {
        py1 += prob[k];
        if ((pos_mask >> k) & 1u) py1_pos += prob[k];
      }
    }
    const double py1_neg = py1 - py1_pos;
    double mi = entropy_clamped(py1) -
                (p_neg * entropy_clamped(py1_neg / p_neg) +
                 p_pos * entropy_clamped(py1_pos / p_pos));
    if (mi < 0.0 && mi > -1e-12) mi = 0.0;

    std::uint8_t wit = 0;
    if ((bits & pos_mask) == pos_mask) wit |= 1u << witness_bit(+1, +1);
    if ((bits & pos_mask) == 0) wit |= 1u << witness_bit(+1, -1);
    if ((bits & neg_mask) == neg_mask) wit |= 1u << witness_bit(-1, +1);
    if ((bits & neg_mask) == 0) wit |= 1u << witness_bit(-1, -1);

    scan.mi[fi] = mi;
    scan.f0[fi] = 2.0 * py1 - 1.0;
    scan.witnesses[fi] = wit;
  }
  return scan;
}

FunctionScan scan_function_space_reference(unsigned n,
                                           const ProductDistribution& d,
                                           unsigned variable) {
  check_scan_arguments(n, d, variable);
  const std::uint32_t table = std::uint32_t{1} << n;
  const std::uint64_t function_count = std::uint64_t{1} << table;

  FunctionScan scan;
  scan.n = n;
  scan.variable = variable;
  scan.mi.reserve(function_count);
  scan.f0.reserve(function_count);
  scan.witnesses.reserve(function_count);

  for (std::uint64_t fi = 0; fi < function_count; ++fi) {
    const TruthTable tt = TruthTable::from_packed_bits(n, fi);
    const MIResult result = mi_brute(tt, d, variable);
    scan.mi.push_back(result.mi);
    scan.f0.push_back(result.f0);
    scan.witnesses.push_back(
        encode_witnesses(detect(tt).for_variable(variable).witnesses));
  }
  return scan;
}

PropositionReport verify_prop1(unsigned n, unsigned variable, int workers) {
  const auto d = ProductDistribution::uniform(n);
  const FunctionScan scan = scan_function_space(n, d, variable, workers);
  const std::uint32_t table = std::uint32_t{1} << n;
  const std::uint32_t function_count = std::uint32_t{1} << table;

  std::uint32_t pos_mask = 0;
  for (std::uint32_t k = 0; k < table; ++k) {
    if ((k >> (variable - 1)) & 1u) pos_mask |= std::uint32_t{1} << k;
  }
  const std::uint32_t full_mask =
      table == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << table) - 1;
  const std::uint32_t neg_mask = full_mask & ~pos_mask;

  PropositionReport report;
  report.proposition = 1;
  report.n = n;
  report.variable = variable;
  report.pass = true;

  // Classes are the exact mean coefficients (2m - 2^n)/2^n for the
  // 2^n + 1 possible ones-counts m.
  std::vector<double> class_max(table + 1, -1.0);
  std::vector<std::size_t> class_size(table + 1, 0);
  for (std::uint32_t bits = 0; bits < function_count; ++bits) {
    const unsigned m = static_cast<unsigned>(std::popcount(bits));
    class_size[m] += 1;
    class_max[m] = std::max(class_max[m], scan.mi[bits]);
  }

  report.classes.resize(table + 1);
  for (unsigned m = 0; m <= table; ++m) {
    ClassRecord& rec = report.classes[m];
    rec.f0_numerator = 2 * static_cast<std::int64_t>(m) -
                       static_cast<std::int64_t>(table);
    rec.f0 = static_cast<double>(rec.f0_numerator) / table;
    rec.size = class_size[m];
    rec.max_mi = class_max[m];
    rec.boundary_mi = mi_canalizing_uniform(rec.f0);
    rec.optimal_pairs = boundary_optimum(rec.f0, 0.0).pairs;
    rec.attainment_required = true;  // every uniform class holds canalizing
                                     // functions with b = sgn(f0)
    rec.all_argmax_canalizing = true;
  }

  for (std::uint32_t bits = 0; bits < function_count; ++bits) {
    const unsigned m = static_cast<unsigned>(std::popcount(bits));
    ClassRecord& rec = report.classes[m];
    if (scan.mi[bits] < rec.max_mi - kArgmaxTieTolerance) continue;
    rec.argmax.push_back(bits);
    // Exact spectral canalization condition p0 + a*p1 = b*2^n.
    const std::int64_t p0 = rec.f0_numerator;
    const std::int64_t p1 =
        2 * (static_cast<std::int64_t>(std::popcount(bits & pos_mask)) -
             static_cast<std::int64_t>(std::popcount(bits & neg_mask)));
    bool canalizing = false;
    for (const int a : {-1, +1}) {
      for (const int b : {-1, +1}) {
        if (p0 + a * p1 == static_cast<std::int64_t>(b) * table) {
          canalizing = true;
        }
      }
    }
    rec.all_argmax_canalizing = rec.all_argmax_canalizing && canalizing;
  }

  for (auto& rec : report.classes) {
    rec.pass = std::abs(rec.max_mi - rec.boundary_mi) <=
                   kBoundaryMatchTolerance &&
               rec.all_argmax_canalizing;
    report.pass = report.pass && rec.pass;
  }
  return report;
}

PropositionReport verify_prop2(unsigned n, unsigned variable,
                               const ProductDistribution& d, int workers) {
  const FunctionScan scan = scan_function_space(n, d, variable, workers);
  const std::uint32_t table = std::uint32_t{1} << n;
  const std::uint32_t function_count = std::uint32_t{1} << table;
  const double mu_i = d.mu(variable);

  // Cluster the mean coefficients at the merge tolerance.
  std::vector<double> sorted(scan.f0.begin(), scan.f0.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> reps;
  std::vector<std::size_t> sizes;
  double run_sum = 0.0;
  std::size_t run_count = 0;
  for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
    if (run_count > 0 && sorted[idx] - sorted[idx - 1] > kClassMergeTolerance) {
      reps.push_back(run_sum / static_cast<double>(run_count));
      sizes.push_back(run_count);
      run_sum = 0.0;
      run_count = 0;
    }
    run_sum += sorted[idx];
    run_count += 1;
  }
  reps.push_back(run_sum / static_cast<double>(run_count));
  sizes.push_back(run_count);

  // Preflight: distinct classes must be separated well beyond the merge
  // tolerance, otherwise the grouping itself is suspect.
  for (std::size_t c = 1; c < reps.size(); ++c) {
    if (reps[c] - reps[c - 1] <= kClassSeparationFloor) {
      throw std::logic_error(
          "coefficient classes are not separated by more than 1e-6; "
          "refusing to merge at tolerance 1e-9");
    }
  }

  auto class_of = [&reps](double f0) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), f0);
    std::size_t c = static_cast<std::size_t>(it - reps.begin());
    if (c == reps.size() ||
        (c > 0 && f0 - reps[c - 1] < reps[c] - f0)) {
      c -= 1;
    }
    return c;
  };

  PropositionReport report;
  report.proposition = 2;
  report.n = n;
  report.variable = variable;
  report.mu = d.means();
  report.pass = true;
  report.classes.resize(reps.size());

  std::vector<double> class_max(reps.size(), -1.0);
  std::vector<std::size_t> assignment(function_count);
  for (std::uint32_t bits = 0; bits < function_count; ++bits) {
    const std::size_t c = class_of(scan.f0[bits]);
    assignment[bits] = c;
    class_max[c] = std::max(class_max[c], scan.mi[bits]);
  }

  for (std::size_t c = 0; c < reps.size(); ++c) {
    ClassRecord& rec = report.classes[c];
    rec.f0 = reps[c];
    rec.size = sizes[c];
    rec.max_mi = class_max[c];
    const BoundaryOptimum best = boundary_optimum(rec.f0, mu_i);
    rec.boundary_mi = best.mi;
    rec.optimal_pairs = best.pairs;
    rec.all_argmax_canalizing = true;
  }

  // The stated optimal witness must always be among the boundary maximizers
  // (ties at |f0| = |mu| and f0 = 0 widen the set but never exclude it).
  for (const auto& rec : report.classes) {
    if (rec.f0 == 0.0 && mu_i == 0.0) continue;
    const CanalizingParams p = optimal_params(rec.f0, mu_i);
    if (std::find(rec.optimal_pairs.begin(), rec.optimal_pairs.end(),
                  Witness{p.a, p.b}) == rec.optimal_pairs.end()) {
      throw std::logic_error("optimal_params disagrees with the boundary "
                             "maximizer set");
    }
  }

  std::vector<double> kstar_min(reps.size(), 2.0);
  std::vector<bool> kstar_present(reps.size(), false);
  for (std::uint32_t bits = 0; bits < function_count; ++bits) {
    const std::size_t c = assignment[bits];
    ClassRecord& rec = report.classes[c];
    const bool optimal_witness =
        witness_hits(scan.witnesses[bits], rec.optimal_pairs);
    if (optimal_witness) {
      kstar_present[c] = true;
      kstar_min[c] = std::min(kstar_min[c], scan.mi[bits]);
    }
    if (scan.mi[bits] >= rec.max_mi - kArgmaxTieTolerance) {
      rec.argmax.push_back(bits);
      rec.all_argmax_canalizing = rec.all_argmax_canalizing && optimal_witness;
    }
  }

  for (std::size_t c = 0; c < reps.size(); ++c) {
    ClassRecord& rec = report.classes[c];
    rec.attainment_required = kstar_present[c];
    const bool upper_ok = rec.max_mi <= rec.boundary_mi +
                                            kBoundaryMatchTolerance;
    bool pass = upper_ok;
    if (rec.attainment_required) {
      pass = pass &&
             std::abs(rec.max_mi - rec.boundary_mi) <=
                 kBoundaryMatchTolerance &&
             rec.all_argmax_canalizing &&
             rec.max_mi - kstar_min[c] <= kBoundaryMatchTolerance;
    }
    rec.pass = pass;
    report.pass = report.pass && pass;
  }
  return report;
}

std::string proposition_text(const PropositionReport& report) {
  std::ostringstream out;
  out << "proposition " << report.proposition << ": n=" << report.n
      << " variable=" << report.variable << " distribution=";
  if (report.mu.empty()) {
    out << "uniform";
  } else {
    out << "mu=(";
    for (std::size_t j = 0; j < report.mu.size(); ++j) {
      if (j > 0) out << ",";
      out << report.mu[j];
    }
    out << ")";
  }
  out << "\n";
  char line[256];
  for (const auto& rec : report.classes) {
    std::snprintf(line, sizeof(line),
                  "  class f0=%+12.9f size=%6zu max_mi=%.12f "
                  "boundary_mi=%.12f argmax=%4zu all_argmax_canalizing=%s "
                  "attained=%s pass=%s\n",
                  rec.f0, rec.size, rec.max_mi, rec.boundary_mi,
                  rec.argmax.size(), rec.all_argmax_canalizing ? "yes" : "no",
                  rec.attainment_required ? "yes" : "n/a",
                  rec.pass ? "yes" : "NO");
    out << line;
  }
  out << "RESULT: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string proposition_csv(const PropositionReport& report) {
  std::ostringstream out;
  out << "class_f0,class_size,max_mi,boundary_mi,all_argmax_canalizing\n";
  char line[192];
  for (const auto& rec : report.classes) {
    std::snprintf(line, sizeof(line), "%.17g,%zu,%.17g,%.17g,%d\n", rec.f0,
                  rec.size, rec.max_mi, rec.boundary_mi,
                  rec.all_argmax_canalizing ? 1 : 0);
    out << line;
  }
  return out.str();
}

std::vector<double> default_mu_magnitudes() {
  std::vector<double> mags;
  for (int k = 1; k <= 9; ++k) mags.push_back(0.1 * k);
  return mags;
}

namespace {

using BranchGetter = std::optional<double> BranchEntropies::*;

void ordered_check(LemmaReport& report, double mu, double f0,
                   BranchGetter lesser, BranchGetter greater,
                   const char* relation) {
  const BranchEntropies values = qrst(f0, mu);
  const std::optional<double> lo = values.*lesser;
  const std::optional<double> hi = values.*greater;
  report.checks += 1;
  if (!lo || !hi || !(*lo < *hi - kLemmaStrictMargin)) {
    report.counterexamples.push_back(LemmaCounterexample{
        mu, f0, lo.value_or(std::nan("")), hi.value_or(std::nan("")),
        relation});
  }
}

void identity_check(LemmaReport& report, double mu, double f0,
                    BranchGetter left, BranchGetter right,
                    const char* relation) {
  const BranchEntropies values = qrst(f0, mu);
  const std::optional<double> lhs = values.*left;
  const std::optional<double> rhs = values.*right;
  report.checks += 1;
  if (!lhs || !rhs || std::abs(*lhs - *rhs) > kCrossingTolerance) {
    report.counterexamples.push_back(LemmaCounterexample{
        mu, f0, lhs.value_or(std::nan("")), rhs.value_or(std::nan("")),
        relation});
  }
}

void zero_check(LemmaReport& report, double mu, double f0, BranchGetter g,
                const char* relation) {
  const BranchEntropies values = qrst(f0, mu);
  const std::optional<double> v = values.*g;
  report.checks += 1;
  if (!v || std::abs(*v) > kCrossingTolerance) {
    report.counterexamples.push_back(
        LemmaCounterexample{mu, f0, v.value_or(std::nan("")), 0.0, relation});
  }
}

}  // namespace

LemmaReport verify_lemma1(std::span<const double> mu_magnitudes,
                          int f0_points) {
  LemmaReport report;
  report.lemma = 1;
  for (const double mag : mu_magnitudes) {
    for (const int sign : {+1, -1}) {
      const double mu = sign * mag;
      for (int j = 0; j < f0_points; ++j) {
        const double f0 = interior_point(-1.0, -mag, f0_points, j);
        if (mu > 0) {
          ordered_check(report, mu, f0, &BranchEntropies::q,
                        &BranchEntropies::r, "q < r");
        } else {
          ordered_check(report, mu, f0, &BranchEntropies::r,
                        &BranchEntropies::q, "q > r");
        }
      }
      zero_check(report, mu, -1.0, &BranchEntropies::q, "q(-1) = 0");
      zero_check(report, mu, -1.0, &BranchEntropies::r, "r(-1) = 0");
    }
  }
  report.pass = report.counterexamples.empty();
  return report;
}

LemmaReport verify_lemma2(std::span<const double> mu_magnitudes,
                          int f0_points) {
  LemmaReport report;
  report.lemma = 2;
  for (const double mag : mu_magnitudes) {
    for (const int sign : {+1, -1}) {
      const double mu = sign * mag;
      for (int j = 0; j < f0_points; ++j) {
        const double f0 = interior_point(mag, 1.0, f0_points, j);
        if (mu > 0) {
          ordered_check(report, mu, f0, &BranchEntropies::s,
                        &BranchEntropies::t, "s < t");
        } else {
          ordered_check(report, mu, f0, &BranchEntropies::t,
                        &BranchEntropies::s, "s > t");
        }
      }
      zero_check(report, mu, 1.0, &BranchEntropies::s, "s(1) = 0");
      zero_check(report, mu, 1.0, &BranchEntropies::t, "t(1) = 0");
    }
  }
  report.pass = report.counterexamples.empty();
  return report;
}

LemmaReport verify_lemma3(std::span<const double> mu_magnitudes,
                          int f0_points) {
  LemmaReport report;
  report.lemma = 3;
  for (const double mag : mu_magnitudes) {
    for (const int sign : {+1, -1}) {
      const double mu = sign * mag;
      for (int j = 0; j < f0_points; ++j) {
        const double f0 = interior_point(-mag, mag, f0_points, j);
        if (std::abs(f0) <= 1e-9) continue;  // crossing handled below
        if (mu > 0) {
          if (f0 < 0) {
            ordered_check(report, mu, f0, &BranchEntropies::t,
                          &BranchEntropies::r, "t < r");
          } else {
            ordered_check(report, mu, f0, &BranchEntropies::r,
                          &BranchEntropies::t, "t > r");
          }
        } else {
          if (f0 < 0) {
            ordered_check(report, mu, f0, &BranchEntropies::s,
                          &BranchEntropies::q, "s < q");
          } else {
            ordered_check(report, mu, f0, &BranchEntropies::q,
                          &BranchEntropies::s, "s > q");
          }
        }
      }
      if (mu > 0) {
        identity_check(report, mu, 0.0, &BranchEntropies::t,
                       &BranchEntropies::r, "t(0) = r(0)");
      } else {
        identity_check(report, mu, 0.0, &BranchEntropies::s,
                       &BranchEntropies::q, "s(0) = q(0)");
      }
    }
  }
  report.pass = report.counterexamples.empty();
  return report;
}

LemmaReport verify_lemma1() {
  const auto mags = default_mu_magnitudes();
  return verify_lemma1(mags, 101);
}

LemmaReport verify_lemma2() {
  const auto mags = default_mu_magnitudes();
  return verify_lemma2(mags, 101);
}

LemmaReport verify_lemma3() {
  const auto mags = default_mu_magnitudes();
  return verify_lemma3(mags, 101);
}

std::string lemma_text(const LemmaReport& report) {
  std::ostringstream out;
  out << "lemma " << report.lemma << ": " << report.checks << " checks, "
      << report.counterexamples.size() << " counterexamples -> "
      << (report.pass ? "PASS" : "FAIL") << "\n";
  char line[192];
  for (const auto& cex : report.counterexamples) {
    std::snprintf(line, sizeof(line),
                  "  violated %s at mu=%+.3f f0=%+.9f (lhs=%.12g rhs=%.12g)\n",
                  cex.relation.c_str(), cex.mu, cex.f0, cex.lhs, cex.rhs);
    out << line;
  }
  return out.str();
}

}  // namespace boolspec
