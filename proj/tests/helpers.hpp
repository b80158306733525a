#pragma once

// Small shared utilities for the test binaries: odometer enumeration of
// [k]^n and code construction from raw digit vectors.

#include <cstdint>
#include <vector>

#include "mmq/game.hpp"

namespace mmq::testing {

/// Advances digits through [k]^n in lexicographic order; false after the
/// last tuple wraps back to all zeros.
inline bool advance_digits(std::vector<int>& digits, int k) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (++*it < k) return true;
    *it = 0;
  }
  return false;
}

inline Code to_code(const GameInstance& game, const std::vector<int>& digits) {
  return Code(game, digits);
}

/// All k^n codes of the game in lexicographic order.
inline std::vector<Code> all_codes(const GameInstance& game) {
  std::vector<Code> out;
  std::vector<int> digits(static_cast<std::size_t>(game.n), 0);
  do {
    out.push_back(to_code(game, digits));
  } while (advance_digits(digits, game.k));
  return out;
}

}  // namespace mmq::testing
