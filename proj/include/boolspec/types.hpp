#pragma once

#include <cstdint>

namespace boolspec {

/// Index of an input assignment. Bit j (LSB = bit 0) encodes variable j+1:
/// bit value 0 means x_{j+1} = -1, bit value 1 means x_{j+1} = +1.
using AssignmentIndex = std::uint32_t;

/// Variable subset U over [n]: bit j set <=> variable j+1 in U.
/// Mask 0 denotes the empty set.
using SubsetMask = std::uint32_t;

/// Soft arity cap; 2^24-entry tables are the largest we allocate.
inline constexpr unsigned kMaxArity = 24;

/// Exhaustive scans over all 2^(2^n) functions are refused above this arity.
inline constexpr unsigned kMaxEnumerationArity = 4;

/// Input value (+1 or -1) of a 1-based variable under assignment k.
inline int input_value(AssignmentIndex k, unsigned variable) {
  return ((k >> (variable - 1)) & 1u) != 0 ? +1 : -1;
}

}  // namespace boolspec
