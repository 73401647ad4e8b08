#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boolspec/canalize.hpp"
#include "boolspec/spectrum.hpp"
#include "boolspec/truth_table.hpp"

namespace boolspec::io {

/// Parse failure with 1-based line/column position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col);

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Truth-table text format, bit-exact:
///   line 1: n=<arity>
///   line 2: 2^n characters over {0,1}; character k is the output at
///           AssignmentIndex k ('0' -> -1, '1' -> +1).
TruthTable parse_truth_table(std::string_view text);
std::string format_truth_table(const TruthTable& tt);

TruthTable load_truth_table(const std::filesystem::path& path);
void save_truth_table(const TruthTable& tt, const std::filesystem::path& path);

/// Spectrum CSV: header `mask,coeff`, masks ascending. Exact spectra write
/// rationals as `p/2^n` strings, Float spectra 17-significant-digit decimals.
std::string spectrum_csv(const FourierSpectrum& s);

/// One JSON record per line: {"variable":i,"canalizing":bool,
/// "witnesses":[[a,b],...]}.
std::string canalizing_json_lines(const CanalizingReport& report);

/// Shortest round-trippable decimal with up to 17 significant digits.
std::string format_double17(double x);

void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace boolspec::io
