#include "boolspec/truth_table.hpp"

#include <bit>
#include <stdexcept>

namespace boolspec {

TruthTable::TruthTable(unsigned n) : n_(n) {
  if (n < 1 || n > kMaxArity) {
    throw std::invalid_argument("truth table arity must be in [1, " +
                                std::to_string(kMaxArity) + "], got " +
                                std::to_string(n));
  }
  words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

TruthTable TruthTable::constant(unsigned n, int value) {
  if (value != -1 && value != +1) {
    throw std::invalid_argument("constant output must be -1 or +1");
  }
  TruthTable tt(n);
  if (value == +1) {
    for (auto& w : tt.words_) w = ~std::uint64_t{0};
    // mask off bits beyond 2^n
    const unsigned used = tt.size() % 64;
    if (used != 0) tt.words_.back() = (std::uint64_t{1} << used) - 1;
  }
  return tt;
}

TruthTable TruthTable::dictator(unsigned n, unsigned variable) {
  TruthTable tt(n);
  if (variable < 1 || variable > n) {
    throw std::invalid_argument("dictator variable out of range");
  }
  for (AssignmentIndex k = 0; k < tt.size(); ++k) {
    tt.set_bit(k, input_value(k, variable) > 0);
  }
  return tt;
}

TruthTable TruthTable::from_packed_bits(unsigned n, std::uint64_t bits) {
  if (n > 6) {
    throw std::invalid_argument("from_packed_bits supports n <= 6");
  }
  TruthTable tt(n);
  tt.words_[0] = tt.size() == 64 ? bits : (bits & ((std::uint64_t{1} << tt.size()) - 1));
  return tt;
}

TruthTable TruthTable::from_bit_chars(unsigned n, std::string_view chars) {
  TruthTable tt(n);
  if (chars.size() != tt.size()) {
    throw std::invalid_argument("expected " + std::to_string(tt.size()) +
                                " output characters, got " +
                                std::to_string(chars.size()));
  }
  for (AssignmentIndex k = 0; k < tt.size(); ++k) {
    const char c = chars[k];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("output characters must be 0 or 1");
    }
    tt.set_bit(k, c == '1');
  }
  return tt;
}

TruthTable TruthTable::random(unsigned n, std::mt19937_64& rng) {
  TruthTable tt(n);
  for (auto& w : tt.words_) w = rng();
  const unsigned used = tt.size() % 64;
  if (used != 0) tt.words_.back() &= (std::uint64_t{1} << used) - 1;
  return tt;
}

int TruthTable::evaluate(AssignmentIndex k) const { return bit(k) ? +1 : -1; }

bool TruthTable::bit(AssignmentIndex k) const {
  check_index(k);
  return ((words_[k >> 6] >> (k & 63)) & 1u) != 0;
}

void TruthTable::set(AssignmentIndex k, int output) {
  if (output != -1 && output != +1) {
    throw std::invalid_argument("output must be -1 or +1");
  }
  set_bit(k, output == +1);
}

void TruthTable::set_bit(AssignmentIndex k, bool one) {
  check_index(k);
  const std::uint64_t mask = std::uint64_t{1} << (k & 63);
  if (one) {
    words_[k >> 6] |= mask;
  } else {
    words_[k >> 6] &= ~mask;
  }
}

std::int64_t TruthTable::output_sum() const {
  return 2 * static_cast<std::int64_t>(ones_count()) -
         static_cast<std::int64_t>(size());
}

std::uint64_t TruthTable::ones_count() const {
  std::uint64_t total = 0;
  for (const auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::uint64_t TruthTable::packed_bits() const {
  if (n_ > 6) {
    throw std::logic_error("packed_bits supports n <= 6");
  }
  return words_[0];
}

void TruthTable::check_index(AssignmentIndex k) const {
  if (k >= size()) {
    throw std::invalid_argument("assignment index " + std::to_string(k) +
                                " out of range for arity " + std::to_string(n_));
  }
}

}  // namespace boolspec
