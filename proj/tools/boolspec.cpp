#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boolspec/canalize.hpp"
#include "boolspec/fourier.hpp"
#include "boolspec/infomeasure.hpp"
#include "boolspec/io.hpp"
#include "boolspec/surface.hpp"
#include "boolspec/truth_table.hpp"
#include "boolspec/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

using boolspec::ProductDistribution;
using boolspec::TruthTable;

ProductDistribution distribution_for(const std::vector<double>& mu,
                                     unsigned n) {
  if (mu.empty()) return ProductDistribution::uniform(n);
  if (mu.size() != n) {
    throw std::invalid_argument("--mu needs exactly " + std::to_string(n) +
                                " comma-separated means");
  }
  return ProductDistribution(mu);
}

int run_analyze(const std::string& path, const std::vector<double>& mu) {
  const TruthTable tt = boolspec::io::load_truth_table(path);
  const ProductDistribution d = distribution_for(mu, tt.arity());

  std::cout << "n=" << tt.arity() << " distribution=";
  if (d.is_uniform()) {
    std::cout << "uniform\n";
  } else {
    std::cout << "mu=(";
    for (unsigned j = 1; j <= d.arity(); ++j) {
      if (j > 1) std::cout << ",";
      std::cout << d.mu(j);
    }
    std::cout << ")\n";
  }

  const auto spectrum = boolspec::transform(tt, d);
  std::cout << "spectrum ("
            << (spectrum.kind() == boolspec::SpectrumKind::Exact ? "exact"
                                                                 : "float")
            << "):\n"
            << boolspec::io::spectrum_csv(spectrum);

  std::cout << "canalizing:\n"
            << boolspec::io::canalizing_json_lines(boolspec::detect(tt));

  std::cout << "mutual information:\n";
  for (unsigned i = 1; i <= tt.arity(); ++i) {
    const auto brute = boolspec::mi_brute(tt, d, i);
    const auto spectral = boolspec::mi_spectral(
        spectrum.value(0), spectrum.value(boolspec::SubsetMask{1} << (i - 1)),
        d.mu(i), static_cast<int>(i));
    std::printf(
        "variable %u: brute=%.17g spectral=%.17g |diff|=%.3g\n", i, brute.mi,
        spectral.mi, std::abs(brute.mi - spectral.mi));
  }
  return kExitOk;
}

int run_verify(unsigned n, unsigned variable, const std::vector<double>& mu,
               int grid_points, const std::string& csv_path) {
  if (n < 2 || n > boolspec::kMaxEnumerationArity) {
    std::cerr << "error: --n must be in [2, "
              << boolspec::kMaxEnumerationArity
              << "]; enumerating 2^(2^n) functions is infeasible beyond that\n";
    return kExitUsage;
  }
  if (variable < 1 || variable > n) {
    std::cerr << "error: --i must name a variable in [1, " << n << "]\n";
    return kExitUsage;
  }

  boolspec::PropositionReport prop;
  if (mu.empty()) {
    prop = boolspec::verify_prop1(n, variable);
  } else {
    prop = boolspec::verify_prop2(n, variable, distribution_for(mu, n));
  }
  std::cout << boolspec::proposition_text(prop);
  if (!csv_path.empty()) {
    boolspec::io::write_file(csv_path, boolspec::proposition_csv(prop));
  }

  const auto mags = boolspec::default_mu_magnitudes();
  bool lemmas_pass = true;
  for (const auto& report :
       {boolspec::verify_lemma1(mags, grid_points),
        boolspec::verify_lemma2(mags, grid_points),
        boolspec::verify_lemma3(mags, grid_points)}) {
    std::cout << boolspec::lemma_text(report);
    lemmas_pass = lemmas_pass && report.pass;
  }

  return prop.pass && lemmas_pass ? kExitOk : kExitVerificationFailure;
}

int run_surface(double mu_i, int resolution, int quantize,
                const std::string& out_path) {
  std::vector<boolspec::SurfaceRow> rows;
  if (quantize > 0) {
    rows = boolspec::mi_surface_quantized(mu_i, static_cast<unsigned>(quantize));
  } else {
    rows = boolspec::mi_surface(mu_i, resolution);
  }
  boolspec::io::write_file(out_path, boolspec::surface_csv(rows));
  std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

int run_transform(const std::string& path, const std::vector<double>& mu,
                  const std::string& out_path) {
  const TruthTable tt = boolspec::io::load_truth_table(path);
  const ProductDistribution d = distribution_for(mu, tt.arity());
  boolspec::io::write_file(out_path,
                           boolspec::io::spectrum_csv(boolspec::transform(tt, d)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectral analysis of Boolean functions under product-distributed "
      "inputs: biased Fourier spectra, canalizing structure, mutual "
      "information, and exhaustive verification that canalizing functions "
      "maximize it.\n"
      "Means are passed as mu_i in (-1,1); P(X_i=+1) = (1+mu_i)/2.\n"
      "BOOLSPEC_WORKERS caps enumeration parallelism (0 = auto)."};
  app.require_subcommand(1);

  std::string table_path;
  std::vector<double> mu;
  auto* analyze = app.add_subcommand("analyze",
                                     "Spectrum, canalizing report and "
                                     "per-variable mutual information of a "
                                     "truth-table file");
  analyze->add_option("file", table_path, "truth-table file")->required();
  analyze->add_option("--mu", mu, "comma-separated per-variable means")
      ->delimiter(',');

  unsigned verify_n = 0;
  unsigned verify_i = 1;
  std::vector<double> verify_mu;
  int grid_points = 101;
  std::string verify_csv;
  auto* verify = app.add_subcommand(
      "verify",
      "Exhaustively check that canalizing functions maximize the mutual "
      "information at n <= 4, plus the branch-entropy ordering grid checks");
  verify->add_option("--n", verify_n, "arity (2..4)")->required();
  verify->add_option("--i", verify_i, "1-based variable")->required();
  verify->add_option("--mu", verify_mu, "comma-separated means (omit for uniform)")
      ->delimiter(',');
  verify->add_option("--grid", grid_points, "interior grid points per lemma interval")
      ->check(CLI::PositiveNumber);
  verify->add_option("--csv", verify_csv, "write the per-class report as CSV");

  double mu_i = 0.0;
  int resolution = 101;
  int quantize = 0;
  std::string out_path;
  auto* surface = app.add_subcommand(
      "surface", "Sample the mutual-information surface over the feasible "
                 "(f0, f1) region as CSV");
  surface->add_option("--mu-i", mu_i, "mean of the distinguished variable");
  surface->add_option("--res", resolution, "grid resolution per axis (>= 2)");
  surface->add_option("--quantize", quantize,
                      "sample only the coefficient lattice achievable at "
                      "this arity (1..10)");
  surface->add_option("-o,--output", out_path, "output CSV path")->required();

  std::string transform_path;
  std::vector<double> transform_mu;
  std::string transform_out;
  auto* transform = app.add_subcommand(
      "transform", "Write the spectrum of a truth-table file as CSV");
  transform->add_option("file", transform_path, "truth-table file")->required();
  transform->add_option("--mu", transform_mu, "comma-separated means")
      ->delimiter(',');
  transform->add_option("-o,--output", transform_out, "output CSV path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(table_path, mu);
    if (*verify) {
      return run_verify(verify_n, verify_i, verify_mu, grid_points, verify_csv);
    }
    if (*surface) return run_surface(mu_i, resolution, quantize, out_path);
    if (*transform) return run_transform(transform_path, transform_mu, transform_out);
  } catch (const boolspec::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
