#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "boolspec/types.hpp"

namespace boolspec {

/// A Boolean function on n inputs, stored as a packed table of 2^n outputs
/// over {-1,+1}. Bit k of the packed storage is 1 exactly when the output at
/// AssignmentIndex k is +1, so every stored output is structurally -1 or +1.
///
/// Tables are plain values: copy, compare, and share freely. Builders mutate
/// a local instance via set() and then treat it as immutable.
class TruthTable {
 public:
  /// All-(-1) table of the given arity (1 <= n <= kMaxArity).
  explicit TruthTable(unsigned n);

  static TruthTable constant(unsigned n, int value);
  static TruthTable dictator(unsigned n, unsigned variable);
  /// Outputs taken from the low 2^n bits of `bits` (n <= 6).
  static TruthTable from_packed_bits(unsigned n, std::uint64_t bits);
  /// Outputs from a string of 2^n characters over {'0','1'}, character k
  /// giving the output at assignment k ('0' -> -1, '1' -> +1).
  static TruthTable from_bit_chars(unsigned n, std::string_view chars);
  static TruthTable random(unsigned n, std::mt19937_64& rng);

  unsigned arity() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }

  /// Output at assignment k, as -1 or +1.
  int evaluate(AssignmentIndex k) const;
  bool bit(AssignmentIndex k) const;

  void set(AssignmentIndex k, int output);
  void set_bit(AssignmentIndex k, bool one);

  /// Sum of all outputs, i.e. 2*ones_count() - 2^n.
  std::int64_t output_sum() const;
  std::uint64_t ones_count() const;

  /// Low 2^n output bits as an integer (n <= 6).
  std::uint64_t packed_bits() const;

  friend bool operator==(const TruthTable& a, const TruthTable& b) = default;

 private:
  void check_index(AssignmentIndex k) const;

  unsigned n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace boolspec
