#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boolspec/canalize.hpp"
#include "boolspec/product_distribution.hpp"

namespace boolspec {

/// Witness-set encoding used by the scan kernels: bit (a>0)*2 + (b>0)
/// set <=> (a,b) is a canalizing witness of the scanned variable.
std::uint8_t encode_witnesses(const std::vector<Witness>& witnesses);
std::vector<Witness> decode_witnesses(std::uint8_t bits);

/// Per-function results of a scan over all 2^(2^n) truth tables. Function
/// index F encodes outputs the same way as packed table bits: bit k of F is
/// the output at assignment k.
struct FunctionScan {
  unsigned n = 0;
  unsigned variable = 0;
  std::vector<double> mi;              // MI(f(X); X_variable)
  std::vector<double> f0;              // mean coefficient of each function
  std::vector<std::uint8_t> witnesses; // encoded witness set for `variable`
};

/// Optimized scan kernel. Enumeration is embarrassingly parallel over
/// function indices; each slot is written independently, so results are
/// bitwise identical for every worker count. Throws std::invalid_argument
/// for n > kMaxEnumerationArity.
FunctionScan scan_function_space(unsigned n, const ProductDistribution& d,
                                 unsigned variable, int workers = 0);

/// Straight-line serial reference for the scan kernel, built from the plain
/// per-table operations (mi_brute, detect). Kept for testing the kernel.
FunctionScan scan_function_space_reference(unsigned n,
                                           const ProductDistribution& d,
                                           unsigned variable);

/// One mean-coefficient class of the function space.
struct ClassRecord {
  double f0 = 0;                    // representative coefficient value
  std::int64_t f0_numerator = 0;    // exact numerator over 2^n (uniform only)
  std::size_t size = 0;
  double max_mi = 0;
  double boundary_mi = 0;           // best boundary value over optimal pairs
  std::vector<Witness> optimal_pairs;
  std::vector<std::uint32_t> argmax;  // function indices attaining max_mi
  bool all_argmax_canalizing = false;
  bool attainment_required = false;   // class holds an optimal-witness function
  bool pass = false;
};

struct PropositionReport {
  int proposition = 0;
  unsigned n = 0;
  unsigned variable = 0;
  std::vector<double> mu;  // empty = uniform
  std::vector<ClassRecord> classes;
  bool pass = false;
};

/// Uniform case: enumerates all 2^(2^n) tables, groups them by the exact
/// mean coefficient, and per class asserts that (1) the largest MI equals
/// mi_canalizing_uniform within 1e-9 and (2) every function attaining it
/// satisfies the spectral canalization condition (exact integer check).
PropositionReport verify_prop1(unsigned n, unsigned variable, int workers = 0);

/// Product case: classes are float coefficients merged at tolerance 1e-9
/// (a preflight assertion requires class representatives separated by more
/// than 1e-6). Per class, where some member is canalizing with an
/// MI-optimal witness, the class maximum must equal the boundary value and
/// every argmax must carry an optimal witness; classes without such a
/// member are checked against the boundary value as an upper bound only.
PropositionReport verify_prop2(unsigned n, unsigned variable,
                               const ProductDistribution& d, int workers = 0);

std::string proposition_text(const PropositionReport& report);
std::string proposition_csv(const PropositionReport& report);

struct LemmaCounterexample {
  double mu = 0;
  double f0 = 0;
  double lhs = 0;
  double rhs = 0;
  std::string relation;  // violated claim, e.g. "q < r"
};

struct LemmaReport {
  int lemma = 0;
  std::size_t checks = 0;
  std::vector<LemmaCounterexample> counterexamples;
  bool pass = false;
};

std::vector<double> default_mu_magnitudes();  // {0.1, ..., 0.9}

/// Ordering of the b = -1 branches on [-1, -|mu|]: q < r for mu > 0 and
/// q > r for mu < 0, strict margin 1e-12 at interior grid points; the
/// shared root q(-1) = r(-1) = 0 is checked as an identity.
LemmaReport verify_lemma1(std::span<const double> mu_magnitudes, int f0_points);

/// Mirror ordering of the b = +1 branches on [|mu|, 1]: s < t for mu > 0,
/// s > t for mu < 0; s(1) = t(1) = 0.
LemmaReport verify_lemma2(std::span<const double> mu_magnitudes, int f0_points);

/// Ordering of the two middle-interval branches on (-|mu|, |mu|):
/// for mu > 0, t < r left of 0 and t > r right of 0 with crossing
/// t(0) = r(0); for mu < 0 the same with s and q.
LemmaReport verify_lemma3(std::span<const double> mu_magnitudes, int f0_points);

LemmaReport verify_lemma1();
LemmaReport verify_lemma2();
LemmaReport verify_lemma3();

std::string lemma_text(const LemmaReport& report);

}  // namespace boolspec
