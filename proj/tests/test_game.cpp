// Classical layer: peg feedback, the characteristic matrix, both
// reconstructions, and the feedback-to-inner-product identities. Expected
// values come from direct definitions and the brute-force oracles in
// baselines.

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "mmq/baselines.hpp"
#include "mmq/errors.hpp"
#include "mmq/game.hpp"

using namespace mmq;
using mmq::testing::advance_digits;
using mmq::testing::all_codes;

namespace {

PairRow pair_row_from_matrix(const CharacteristicMatrix& m, Color a, Color b) {
  PairRow row{a, b, Bits(static_cast<std::size_t>(m.n), 0)};
  for (int j = 0; j < m.n; ++j)
    row.bits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(m.at(a, j) | m.at(b, j));
  return row;
}

Secret star_round_trip(const Secret& s) {
  const CharacteristicMatrix m = characteristic_matrix(s);
  std::vector<PairRow> rows;
  for (Color c = 1; c < s.k(); ++c) rows.push_back(pair_row_from_matrix(m, 0, c));
  return reconstruct_from_star(s.game(), rows);
}

Secret triple_round_trip(const Secret& s) {
  const CharacteristicMatrix m = characteristic_matrix(s);
  const TripleCover cover = build_triple_cover(s.k());
  std::vector<std::pair<PairRow, PairRow>> rows;
  for (const Triple& t : cover.triples)
    rows.emplace_back(pair_row_from_matrix(m, t.g, t.l), pair_row_from_matrix(m, t.l, t.h));
  return reconstruct_from_triples(s.game(), cover, rows);
}

int direct_dot(const Secret& s, const std::vector<Color>& subset, const Bits& y) {
  const ColorSubsetIndicator ind = color_subset_indicator(s, subset);
  int dot = 0;
  for (std::size_t i = 0; i < y.size(); ++i) dot += ind.bits[i] * y[i];
  return dot;
}

}  // namespace

TEST_SUITE("unit.game") {

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(GameInstance(0, 3), ContractViolation);
  CHECK_THROWS_AS(GameInstance(2, 1), ContractViolation);
  const GameInstance game(3, 4);
  CHECK_THROWS_AS(Code(game, {0, 1}), ContractViolation);
  CHECK_THROWS_AS(Code(game, {0, 1, 4}), ContractViolation);
  CHECK_THROWS_AS(Code(game, {0, 1, -1}), ContractViolation);
}

TEST_CASE("black_peg counts exact matches") {
  const GameInstance game(4, 3);
  const Code s(game, {0, 1, 2, 0});
  CHECK(black_peg(s, s) == 4);
  CHECK(black_peg(s, Code(game, {0, 2, 2, 1})) == 2);
  const GameInstance two(2, 2);
  CHECK(black_peg(Code(two, {0, 1}), Code(two, {1, 0})) == 0);
  CHECK_THROWS_AS(black_peg(s, Code(GameInstance(4, 4), {0, 1, 2, 0})), ContractViolation);
}

TEST_CASE("white_peg matches the permutation definition") {
  const GameInstance g4(4, 2);
  const Code s(g4, {0, 0, 1, 1});
  const Code x(g4, {1, 1, 0, 0});
  CHECK(black_peg(s, x) == 0);
  CHECK(white_peg(s, x) == 4);
  CHECK(white_peg(s, s) == 0);

  // Brute force fixes B=1, W=1 here: only two value matches exist in total.
  const GameInstance g3(3, 3);
  const Code s2(g3, {0, 1, 2});
  const Code x2(g3, {1, 2, 2});
  CHECK(black_peg(s2, x2) == 1);
  CHECK(white_peg(s2, x2) == permutation_white_peg(s2, x2));
  CHECK(white_peg(s2, x2) == 1);
}

TEST_CASE("white_peg equals permutation brute force exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 2; k <= 3; ++k) {
      const GameInstance game(n, k);
      for (const Code& s : all_codes(game))
        for (const Code& x : all_codes(game)) {
          CHECK(white_peg(s, x) == permutation_white_peg(s, x));
          const Feedback fb = black_white_peg(s, x);
          CHECK(fb.black == black_peg(s, x));
          CHECK(fb.white == white_peg(s, x));
          CHECK(fb.black + fb.white <= n);
        }
    }
  }
}

TEST_CASE("characteristic matrix definition and round trip") {
  const CharacteristicMatrix m1 = characteristic_matrix(Code(GameInstance(2, 2), {0, 0}));
  CHECK(m1.bits == Bits{1, 1, 0, 0});

  const CharacteristicMatrix m2 = characteristic_matrix(Code(GameInstance(3, 3), {2, 0, 2}));
  CHECK(m2.bits == Bits{0, 1, 0, 0, 0, 0, 1, 0, 1});

  const GameInstance game(3, 3);
  for (const Code& s : all_codes(game)) {
    const CharacteristicMatrix m = characteristic_matrix(s);
    for (int j = 0; j < m.n; ++j) {
      int column_sum = 0;
      for (Color c = 0; c < m.k; ++c) column_sum += m.at(c, j);
      CHECK(column_sum == 1);
    }
    CHECK(secret_from_matrix(game, m) == s);
  }
}

TEST_CASE("secret_from_matrix rejects non-characteristic matrices") {
  const GameInstance game(2, 2);
  CHECK_THROWS_AS(secret_from_matrix(game, CharacteristicMatrix{2, 2, Bits{0, 1, 0, 0}}),
                  MalformedInput);
  CHECK_THROWS_AS(secret_from_matrix(game, CharacteristicMatrix{2, 2, Bits{1, 1, 1, 0}}),
                  MalformedInput);
}

TEST_CASE("star reconstruction round trips") {
  CHECK(star_round_trip(Code(GameInstance(3, 3), {0, 1, 2})) ==
        Code(GameInstance(3, 3), {0, 1, 2}));
  CHECK(star_round_trip(Code(GameInstance(4, 4), {1, 1, 1, 1})) ==
        Code(GameInstance(4, 4), {1, 1, 1, 1}));

  // A column no pair row claims cannot come from any secret.
  const GameInstance game(1, 3);
  std::vector<PairRow> rows{{0, 1, Bits{0}}, {0, 2, Bits{0}}};
  CHECK_THROWS_AS(reconstruct_from_star(game, rows), MalformedInput);
}

TEST_CASE("triple reconstruction round trips") {
  CHECK(triple_round_trip(Code(GameInstance(3, 3), {0, 1, 2})) ==
        Code(GameInstance(3, 3), {0, 1, 2}));
  // Both positions decode only in the second triple of the k=4 cover.
  CHECK(triple_round_trip(Code(GameInstance(2, 4), {3, 3})) == Code(GameInstance(2, 4), {3, 3}));

  const GameInstance game(1, 4);
  const TripleCover cover = build_triple_cover(4);
  SUBCASE("conflicting decodes rejected") {
    std::vector<std::pair<PairRow, PairRow>> rows{
        {{0, 1, Bits{1}}, {1, 2, Bits{0}}},   // decodes position 0 as color 0
        {{1, 2, Bits{1}}, {2, 3, Bits{0}}}};  // decodes position 0 as color 1
    CHECK_THROWS_AS(reconstruct_from_triples(game, cover, rows), MalformedInput);
  }
  SUBCASE("undecoded position rejected") {
    std::vector<std::pair<PairRow, PairRow>> rows{{{0, 1, Bits{0}}, {1, 2, Bits{0}}},
                                                  {{1, 2, Bits{0}}, {2, 3, Bits{0}}}};
    CHECK_THROWS_AS(reconstruct_from_triples(game, cover, rows), MalformedInput);
  }
}

TEST_CASE("triple cover construction") {
  const TripleCover c3 = build_triple_cover(3);
  REQUIRE(c3.triples.size() == 1);
  CHECK(c3.triples[0].g == 0);
  CHECK(c3.triples[0].l == 1);
  CHECK(c3.triples[0].h == 2);

  const TripleCover c4 = build_triple_cover(4);
  REQUIRE(c4.triples.size() == 2);
  CHECK(c4.triples[1].g == 1);
  CHECK(c4.triples[1].l == 2);
  CHECK(c4.triples[1].h == 3);

  const TripleCover c10 = build_triple_cover(10);
  REQUIRE(c10.triples.size() == 4);
  CHECK(c10.triples[2].g == 6);
  CHECK(c10.triples[2].l == 7);
  CHECK(c10.triples[2].h == 8);
  CHECK(c10.triples[3].g == 7);
  CHECK(c10.triples[3].l == 8);
  CHECK(c10.triples[3].h == 9);

  CHECK_THROWS_AS(build_triple_cover(2), ContractViolation);
}

TEST_CASE("two-color query string and its feedback identity") {
  const GameInstance g6(4, 6);
  CHECK(two_color_query_string(g6, Bits{0, 0, 0, 0}, 2, 5) == Code(g6, {2, 2, 2, 2}));
  const GameInstance g2(4, 2);
  CHECK(two_color_query_string(g2, Bits{0, 1, 0, 1}, 0, 1) == Code(g2, {0, 1, 0, 1}));

  const GameInstance g5(4, 5);
  const Code s(g5, {3, 4, 0, 3});
  CHECK(black_peg(s, two_color_query_string(g5, Bits{0, 1, 1, 0}, 3, 4)) == 3);

  // B_s(y^x) counts c_l matches under bit 0 plus c_h matches under bit 1.
  for (int n = 1; n <= 3; ++n) {
    const GameInstance game(n, 3);
    for (const Code& sec : all_codes(game)) {
      for (Color cl = 0; cl < 3; ++cl) {
        for (Color ch = 0; ch < 3; ++ch) {
          if (cl == ch) continue;
          std::vector<int> x(static_cast<std::size_t>(n), 0);
          do {
            Bits bits(x.begin(), x.end());
            int expected = 0;
            for (int i = 0; i < n; ++i)
              expected += (x[static_cast<std::size_t>(i)] == 0) ? (sec[i] == cl) : (sec[i] == ch);
            CHECK(black_peg(sec, two_color_query_string(game, bits, cl, ch)) == expected);
          } while (advance_digits(x, 2));
        }
      }
    }
  }
}

TEST_CASE("occupied colors and subset indicator") {
  const Code s(GameInstance(3, 3), {0, 2, 2});
  CHECK(occupied_colors(s) == std::vector<Color>{0, 2});
  CHECK(color_subset_indicator(s, {0, 1, 2}).bits == Bits{1, 0, 1});
  CHECK(color_subset_indicator(s, {1}).bits == Bits{0});
}

TEST_CASE("bw_inner_product pinned values") {
  const GameInstance game(3, 3);
  const Code s1(game, {0, 2, 2});
  const int b1_s1 = black_peg(s1, Code(game, {1, 1, 1}));
  CHECK(bw_inner_product(s1, {0, 2}, Bits{0, 0}, b1_s1) == 0);
  CHECK(bw_inner_product(s1, {0, 2}, Bits{1, 1}, b1_s1) == 2);

  const Code s2(game, {2, 2, 2});
  const int b1_s2 = black_peg(s2, Code(game, {1, 1, 1}));
  CHECK(bw_inner_product(s2, {0, 1}, Bits{1, 0}, b1_s2) == 0);

  CHECK_THROWS_AS(bw_inner_product(s1, {0, 1, 2, 0}, Bits{1, 1, 1, 1}, b1_s1), ContractViolation);
}

TEST_CASE("bw_inner_product equals the direct dot product exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 2; k <= 3; ++k) {
      const GameInstance game(n, k);
      std::vector<std::vector<Color>> subsets;
      for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<Color> subset;
        for (Color c = 0; c < k; ++c)
          if (mask & (1 << c)) subset.push_back(c);
        if (static_cast<int>(subset.size()) > n) continue;
        subsets.push_back(subset);
        if (subset.size() > 1) {  // order of T must not matter for the identity
          std::vector<Color> reversed(subset.rbegin(), subset.rend());
          subsets.push_back(reversed);
        }
      }
      const Code all_ones(game, std::vector<Color>(static_cast<std::size_t>(n), 1));
      for (const Code& s : all_codes(game)) {
        const int b1 = black_peg(s, all_ones);
        for (const std::vector<Color>& subset : subsets) {
          std::vector<int> y(subset.size(), 0);
          do {
            Bits bits(y.begin(), y.end());
            CHECK(bw_inner_product(s, subset, bits, b1) == direct_dot(s, subset, bits));
          } while (advance_digits(y, 2));
        }
      }
    }
  }
}

}  // TEST_SUITE
