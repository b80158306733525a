#pragma once

// Query accounting. Composite oracles charge their construction cost in
// black-peg (or black-white-peg) units, so a single application of a derived
// oracle may bump several counters at once.

#include <array>
#include <cstddef>
#include <map>
#include <string>

namespace mmq {

enum class QueryKind : int {
  black_peg = 0,
  black_white_peg,
  two_color,
  ipt,
  ipk,
  hamming_parity,
  padded,
};

inline constexpr std::size_t kQueryKindCount = 7;

const char* to_string(QueryKind kind);

/// The cost of one oracle application, possibly in several units at once.
/// A two-color application charges {two_color, 1} and {black_peg, 1}; an IPK
/// application charges {ipk, 1}, {ipt, ceil(log2 k)}, and
/// {black_peg, k * ceil(log2 k)}.
struct Charge {
  QueryKind kind;
  long long amount = 1;
};

/// Per-kind monotone counters for one algorithm execution (single writer).
class QueryLedger {
 public:
  void add(QueryKind kind, long long amount);
  long long count(QueryKind kind) const;

  /// Total cost in black-peg units. Derived charges already fold their
  /// conversion cost into the black_peg counter, so this is that counter.
  long long black_peg_equivalent() const { return count(QueryKind::black_peg); }

  std::map<std::string, long long> to_map() const;

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;

 private:
  std::array<long long, kQueryKindCount> counts_{};
};

}  // namespace mmq
