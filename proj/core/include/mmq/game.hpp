#pragma once

// Classical Mastermind semantics: peg feedback, the characteristic matrix,
// and the reconstruction procedures that turn measured rows back into the
// secret string.

#include <cstdint>
#include <utility>
#include <vector>

#include "mmq/errors.hpp"

namespace mmq {

/// Color index. Colors are 0-based everywhere: the alphabet of a game with k
/// colors is {0, 1, ..., k-1}.
using Color = int;

/// A 0/1 string stored one bit per byte.
using Bits = std::vector<std::uint8_t>;

/// The (n, k) problem: n positions, k colors.
struct GameInstance {
  int n = 0;
  int k = 0;

  GameInstance(int n_, int k_) : n(n_), k(k_) {
    if (n < 1) throw ContractViolation("GameInstance: n must be >= 1");
    if (k < 2) throw ContractViolation("GameInstance: k must be >= 2");
  }

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

/// A color string of length n over [k], used both as secret and as query.
class Code {
 public:
  Code(GameInstance game, std::vector<Color> digits) : game_(game), digits_(std::move(digits)) {
    if (static_cast<int>(digits_.size()) != game_.n)
      throw ContractViolation("Code: digit count must equal n");
    for (Color d : digits_)
      if (d < 0 || d >= game_.k) throw ContractViolation("Code: digit out of [k]");
  }

  const GameInstance& game() const noexcept { return game_; }
  const std::vector<Color>& digits() const noexcept { return digits_; }
  int n() const noexcept { return game_.n; }
  int k() const noexcept { return game_.k; }
  Color operator[](int i) const { return digits_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const Code&, const Code&) = default;

 private:
  GameInstance game_;
  std::vector<Color> digits_;
};

using Secret = Code;
using Query = Code;

/// One round of feedback: black = exact matches, white = additional
/// right-color-wrong-position matches. Invariant: black + white <= n.
struct Feedback {
  int black = 0;
  int white = 0;

  friend bool operator==(const Feedback&, const Feedback&) = default;
};

/// The k x n 0/1 matrix M with M(c, j) = 1 iff s_j = c. Every column of a
/// matrix built from a secret contains exactly one 1.
struct CharacteristicMatrix {
  int k = 0;
  int n = 0;
  Bits bits;  // row-major, bits[c * n + j]

  std::uint8_t at(Color c, int j) const { return bits.at(static_cast<std::size_t>(c) * n + j); }
};

/// The sum of two rows of M: bits_i == 1 iff s_i is one of the two colors.
struct PairRow {
  Color a = 0;
  Color b = 0;
  Bits bits;
};

/// An ordered color triple (c_g, c_l, c_h) with pairwise-distinct entries.
struct Triple {
  Color g = 0;
  Color l = 0;
  Color h = 0;
};

/// ceil(k/3) triples covering [k]. All triples except possibly the last are
/// disjoint; when k mod 3 != 0 the last triple borrows trailing colors of its
/// predecessor to pad to three.
struct TripleCover {
  std::vector<Triple> triples;
};

/// For an ordered color list T, the bit string with bits_i == 1 iff the i-th
/// color of T occurs in the secret.
struct ColorSubsetIndicator {
  std::vector<Color> subset;
  Bits bits;
};

/// Number of positions where s and x coincide.
int black_peg(const Secret& s, const Query& x);

/// Right-color-wrong-position count: the permutation-maximization definition,
/// computed through the multiset identity
///   W = sum_c min(count_s(c), count_x(c)) - B.
/// The literal permutation maximization lives in baselines as a test oracle.
int white_peg(const Secret& s, const Query& x);

/// Both peg counts of one query.
Feedback black_white_peg(const Secret& s, const Query& x);

/// The characteristic matrix of s; satisfies s = sum_c c * M(c, *).
CharacteristicMatrix characteristic_matrix(const Secret& s);

/// Recovers s from a characteristic matrix. Throws MalformedInput unless
/// every column holds exactly one 1.
Secret secret_from_matrix(const GameInstance& game, const CharacteristicMatrix& m);

/// Star reconstruction for k >= 3: given the k-1 pair rows M^(c1,ci) anchored
/// on a common color c1, recovers M(c1, *) = M^(c1,c2) AND M^(c1,c3), then
/// M(ci, *) = M(c1, *) XOR M^(c1,ci), and finally s. Throws MalformedInput on
/// inconsistent rows.
Secret reconstruct_from_star(const GameInstance& game, const std::vector<PairRow>& pair_rows);

/// Triple reconstruction: for each triple (c_g, c_l, c_h) with rows
/// {M^(cg,cl), M^(cl,ch)}, position i decodes as
///   (1,1) -> c_l,  (1,0) -> c_g,  (0,1) -> c_h,  (0,0) -> not in the triple.
/// Every position must be decoded at least once and never inconsistently.
Secret reconstruct_from_triples(const GameInstance& game, const TripleCover& cover,
                                const std::vector<std::pair<PairRow, PairRow>>& rows_per_triple);

/// Deterministic triple cover: consecutive blocks (0,1,2), (3,4,5), ...; when
/// k mod 3 != 0 the last triple keeps the remaining colors and borrows the
/// trailing colors of its predecessor, e.g. k=10 -> (6,7,8), (7,8,9).
TripleCover build_triple_cover(int k);

/// The query string y^x of the two-color oracle: y^x_i = c_l where x_i = 0
/// and c_h where x_i = 1. Satisfies B_s(y^x) = B_s^(cl,ch)(x).
Query two_color_query_string(const GameInstance& game, const Bits& x, Color c_l, Color c_h);

/// The bit string x^(T,s) indicating which colors of T occur in s.
ColorSubsetIndicator color_subset_indicator(const Secret& s, const std::vector<Color>& subset);

/// The sorted set C_s of colors occupied by s.
std::vector<Color> occupied_colors(const Secret& s);

/// Computes the inner product x^(T,s) . y from one black-white-peg feedback,
/// given b1 = B_s(1^n) from a prior query on the all-ones string. Builds the
/// probe string z (t_i where y_i = 1, filler color 1 elsewhere and on the
/// trailing positions) and evaluates
///   B_s(z) + W_s(z) - min{n - |y|, b1}     if color 1 is not among the
///                                          selected t_i or b1 = 0,
///   B_s(z) + W_s(z) - min{n - |y|, b1 - 1} otherwise,
/// where |y| is the Hamming weight of y.
int bw_inner_product(const Secret& s, const std::vector<Color>& subset, const Bits& y, int b1);

}  // namespace mmq
