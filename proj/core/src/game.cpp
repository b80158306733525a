#include "mmq/game.hpp"

#include <algorithm>
#include <cstdlib>

namespace mmq {
namespace {

void require_same_game(const Code& s, const Code& x, const char* op) {
  if (s.game() != x.game())
    throw ContractViolation(std::string(op) + ": secret and query belong to different games");
}

void require_valid_subset(const GameInstance& game, const std::vector<Color>& subset,
                          const char* op) {
  if (static_cast<int>(subset.size()) > game.n)
    throw ContractViolation(std::string(op) + ": color subset larger than n");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(game.k), 0);
  for (Color c : subset) {
    if (c < 0 || c >= game.k) throw ContractViolation(std::string(op) + ": color out of [k]");
    if (seen[static_cast<std::size_t>(c)])
      throw ContractViolation(std::string(op) + ": repeated color in subset");
    seen[static_cast<std::size_t>(c)] = 1;
  }
}

std::vector<int> color_counts(const Code& c) {
  std::vector<int> counts(static_cast<std::size_t>(c.k()), 0);
  for (Color d : c.digits()) ++counts[static_cast<std::size_t>(d)];
  return counts;
}

}  // namespace

int black_peg(const Secret& s, const Query& x) {
  require_same_game(s, x, "black_peg");
  int b = 0;
  for (int i = 0; i < s.n(); ++i)
    if (s[i] == x[i]) ++b;
  return b;
}

int white_peg(const Secret& s, const Query& x) {
  require_same_game(s, x, "white_peg");
  const std::vector<int> cs = color_counts(s);
  const std::vector<int> cx = color_counts(x);
  int overlap = 0;
  for (int c = 0; c < s.k(); ++c)
    overlap += std::min(cs[static_cast<std::size_t>(c)], cx[static_cast<std::size_t>(c)]);
  return overlap - black_peg(s, x);
}

Feedback black_white_peg(const Secret& s, const Query& x) {
  return Feedback{black_peg(s, x), white_peg(s, x)};
}

CharacteristicMatrix characteristic_matrix(const Secret& s) {
  CharacteristicMatrix m;
  m.k = s.k();
  m.n = s.n();
  m.bits.assign(static_cast<std::size_t>(m.k) * m.n, 0);
  for (int j = 0; j < m.n; ++j) m.bits[static_cast<std::size_t>(s[j]) * m.n + j] = 1;
  return m;
}

Secret secret_from_matrix(const GameInstance& game, const CharacteristicMatrix& m) {
  if (m.k != game.k || m.n != game.n)
    throw ContractViolation("secret_from_matrix: matrix shape does not match game");
  std::vector<Color> digits(static_cast<std::size_t>(game.n), 0);
  for (int j = 0; j < game.n; ++j) {
    int ones = 0;
    for (Color c = 0; c < game.k; ++c) {
      if (m.at(c, j)) {
        ++ones;
        digits[static_cast<std::size_t>(j)] = c;
      }
    }
    if (ones != 1)
      throw MalformedInput("secret_from_matrix: column must contain exactly one 1");
  }
  return Secret(game, std::move(digits));
}

Secret reconstruct_from_star(const GameInstance& game, const std::vector<PairRow>& pair_rows) {
  if (game.k < 3) throw ContractViolation("reconstruct_from_star: requires k >= 3");
  if (static_cast<int>(pair_rows.size()) != game.k - 1)
    throw ContractViolation("reconstruct_from_star: expected k-1 pair rows");
  const Color anchor = pair_rows.front().a;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(game.k), 0);
  seen[static_cast<std::size_t>(anchor)] = 1;
  for (const PairRow& row : pair_rows) {
    if (row.a != anchor)
      throw ContractViolation("reconstruct_from_star: rows must share the anchor color");
    if (row.b < 0 || row.b >= game.k || row.b == anchor ||
        seen[static_cast<std::size_t>(row.b)])
      throw ContractViolation("reconstruct_from_star: rows must cover each other color once");
    seen[static_cast<std::size_t>(row.b)] = 1;
    if (static_cast<int>(row.bits.size()) != game.n)
      throw ContractViolation("reconstruct_from_star: pair row length must equal n");
  }

  // The anchor row is the intersection of any two pair rows: the non-anchor
  // rows of M are disjoint, so their contribution to the AND vanishes.
  Bits anchor_row(static_cast<std::size_t>(game.n), 0);
  for (int j = 0; j < game.n; ++j)
    anchor_row[static_cast<std::size_t>(j)] =
        pair_rows[0].bits[static_cast<std::size_t>(j)] &
        pair_rows[1].bits[static_cast<std::size_t>(j)];

  CharacteristicMatrix m;
  m.k = game.k;
  m.n = game.n;
  m.bits.assign(static_cast<std::size_t>(game.k) * game.n, 0);
  for (int j = 0; j < game.n; ++j)
    m.bits[static_cast<std::size_t>(anchor) * game.n + j] = anchor_row[static_cast<std::size_t>(j)];
  for (const PairRow& row : pair_rows)
    for (int j = 0; j < game.n; ++j)
      m.bits[static_cast<std::size_t>(row.b) * game.n + j] =
          anchor_row[static_cast<std::size_t>(j)] ^ row.bits[static_cast<std::size_t>(j)];
  return secret_from_matrix(game, m);
}

Secret reconstruct_from_triples(const GameInstance& game, const TripleCover& cover,
                                const std::vector<std::pair<PairRow, PairRow>>& rows_per_triple) {
  if (cover.triples.size() != rows_per_triple.size())
    throw ContractViolation("reconstruct_from_triples: one row pair required per triple");
  std::vector<Color> decoded(static_cast<std::size_t>(game.n), -1);
  for (std::size_t t = 0; t < cover.triples.size(); ++t) {
    const Triple& triple = cover.triples[t];
    const PairRow& gl = rows_per_triple[t].first;
    const PairRow& lh = rows_per_triple[t].second;
    if (gl.a != triple.g || gl.b != triple.l || lh.a != triple.l || lh.b != triple.h)
      throw ContractViolation("reconstruct_from_triples: rows do not match the triple");
    if (static_cast<int>(gl.bits.size()) != game.n || static_cast<int>(lh.bits.size()) != game.n)
      throw ContractViolation("reconstruct_from_triples: pair row length must equal n");
    for (int j = 0; j < game.n; ++j) {
      const std::uint8_t in_gl = gl.bits[static_cast<std::size_t>(j)];
      const std::uint8_t in_lh = lh.bits[static_cast<std::size_t>(j)];
      Color value = -1;
      if (in_gl && in_lh)
        value = triple.l;
      else if (in_gl)
        value = triple.g;
      else if (in_lh)
        value = triple.h;
      if (value < 0) continue;
      Color& slot = decoded[static_cast<std::size_t>(j)];
      if (slot >= 0 && slot != value)
        throw MalformedInput("reconstruct_from_triples: conflicting decodes for a position");
      slot = value;
    }
  }
  for (Color value : decoded)
    if (value < 0) throw MalformedInput("reconstruct_from_triples: undecided position");
  return Secret(game, std::move(decoded));
}

TripleCover build_triple_cover(int k) {
  if (k < 3) throw ContractViolation("build_triple_cover: requires k >= 3");
  TripleCover cover;
  for (int start = 0; start + 3 <= k; start += 3)
    cover.triples.push_back(Triple{start, start + 1, start + 2});
  // Leftover colors pad to a final triple by borrowing the trailing colors of
  // the previous one, k=10 -> (6,7,8), (7,8,9).
  if (k % 3 != 0) cover.triples.push_back(Triple{k - 3, k - 2, k - 1});
  return cover;
}

Query two_color_query_string(const GameInstance& game, const Bits& x, Color c_l, Color c_h) {
  if (c_l == c_h) throw ContractViolation("two_color_query_string: colors must differ");
  if (c_l < 0 || c_l >= game.k || c_h < 0 || c_h >= game.k)
    throw ContractViolation("two_color_query_string: color out of [k]");
  if (static_cast<int>(x.size()) != game.n)
    throw ContractViolation("two_color_query_string: bit string length must equal n");
  std::vector<Color> digits(static_cast<std::size_t>(game.n));
  for (int i = 0; i < game.n; ++i)
    digits[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] ? c_h : c_l;
  return Query(game, std::move(digits));
}

ColorSubsetIndicator color_subset_indicator(const Secret& s, const std::vector<Color>& subset) {
  require_valid_subset(s.game(), subset, "color_subset_indicator");
  std::vector<std::uint8_t> occupied(static_cast<std::size_t>(s.k()), 0);
  for (Color d : s.digits()) occupied[static_cast<std::size_t>(d)] = 1;
  ColorSubsetIndicator out;
  out.subset = subset;
  out.bits.reserve(subset.size());
  for (Color c : subset) out.bits.push_back(occupied[static_cast<std::size_t>(c)]);
  return out;
}

std::vector<Color> occupied_colors(const Secret& s) {
  std::vector<Color> colors = s.digits();
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

int bw_inner_product(const Secret& s, const std::vector<Color>& subset, const Bits& y, int b1) {
  require_valid_subset(s.game(), subset, "bw_inner_product");
  if (y.size() != subset.size())
    throw ContractViolation("bw_inner_product: y length must equal subset size");
  if (b1 < 0 || b1 > s.n())
    throw ContractViolation("bw_inner_product: b1 out of [0, n]");

  const int n = s.n();
  const int t = static_cast<int>(subset.size());
  std::vector<Color> z(static_cast<std::size_t>(n), 1);
  int weight = 0;
  bool filler_selected = false;
  for (int i = 0; i < t; ++i) {
    if (!y[static_cast<std::size_t>(i)]) continue;
    z[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i)];
    ++weight;
    if (subset[static_cast<std::size_t>(i)] == 1) filler_selected = true;
  }
  const Feedback fb = black_white_peg(s, Query(s.game(), std::move(z)));
  const int slack = (!filler_selected || b1 == 0) ? b1 : b1 - 1;
  return fb.black + fb.white - std::min(n - weight, slack);
}

}  // namespace mmq
