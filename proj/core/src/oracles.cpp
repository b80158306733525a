#include "mmq/oracles.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mmq {
namespace {

int ceil_log2(int k) {
  int m = 0;
  while ((1 << m) < k) ++m;
  return m;
}

// IPT_s(x) for x in [2]^n through the k parallel feedback counts, verifying
// the counting identity sum_c n_c = |V| + k a on every evaluation.
long long ipt_via_feedback(const Secret& s, const std::vector<int>& x) {
  const GameInstance game = s.game();
  const int k = game.k;
  int weight = 0;
  for (int i = 0; i < game.n; ++i)
    if (x[static_cast<std::size_t>(i)]) ++weight;

  long long sum_counts = 0;
  std::vector<long long> counts(static_cast<std::size_t>(k), 0);
  std::vector<Color> probe(static_cast<std::size_t>(game.n));
  for (Color c = 0; c < k; ++c) {
    for (int i = 0; i < game.n; ++i)
      probe[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] ? c : 0;
    counts[static_cast<std::size_t>(c)] = black_peg(s, Query(game, probe));
    sum_counts += counts[static_cast<std::size_t>(c)];
  }

  long long zero_outside = 0;  // a = |{i not in V : s_i = 0}|
  for (int i = 0; i < game.n; ++i)
    if (!x[static_cast<std::size_t>(i)] && s[i] == 0) ++zero_outside;
  if (sum_counts != weight + static_cast<long long>(k) * zero_outside)
    throw std::logic_error("ipt: counting identity sum_c n_c = |V| + k a violated");

  const long long shift = (sum_counts - weight) / k;
  long long acc = 0;
  for (Color c = 0; c < k; ++c) {
    const long long v_c = counts[static_cast<std::size_t>(c)] - shift;
    acc = (acc + c * v_c) % k;
  }
  return ((acc % k) + k) % k;
}

}  // namespace

void OracleHandle::apply(StateVector& state, QueryLedger& ledger, bool inverse) const {
  const RegisterLayout& actual = state.layout();
  if (actual.num_registers() != static_cast<int>(query_dims.size()) + 1 ||
      actual.dim(actual.num_registers() - 1) != modulus)
    throw ContractViolation("OracleHandle::apply: state layout does not match the oracle");
  for (std::size_t i = 0; i < query_dims.size(); ++i)
    if (actual.dims()[i] != query_dims[i])
      throw ContractViolation("OracleHandle::apply: query register dimensions do not match");

  const int m = modulus;
  const auto& g = value;
  const std::size_t nq = query_dims.size();
  BasisPermutation f = [m, inverse, &g, nq](std::vector<int>& digits) {
    const std::vector<int> query(digits.begin(), digits.begin() + static_cast<long>(nq));
    const long long delta = g(query) % m;
    long long b = digits.back();
    b = inverse ? (b - delta % m + m) % m : (b + delta) % m;
    digits.back() = static_cast<int>(b);
  };
  apply_permutation_oracle(state, f, &ledger, charges);
}

RegisterLayout OracleHandle::layout() const {
  std::vector<int> dims = query_dims;
  dims.push_back(modulus);
  return RegisterLayout(std::move(dims));
}

OracleHandle make_black_peg_oracle(const Secret& s, int ancilla_modulus) {
  if (ancilla_modulus < s.n() + 1)
    throw ContractViolation("make_black_peg_oracle: modulus below n+1 loses feedback information");
  OracleHandle h;
  h.kind = QueryKind::black_peg;
  h.query_dims.assign(static_cast<std::size_t>(s.n()), s.k());
  h.modulus = ancilla_modulus;
  h.value = [s](const std::vector<int>& x) {
    return static_cast<long long>(black_peg(s, Query(s.game(), x)));
  };
  h.charges = {{QueryKind::black_peg, 1}};
  return h;
}

OracleHandle make_two_color_oracle(const Secret& s, Color c_l, Color c_h, int m) {
  if ((std::size_t{1} << m) < static_cast<std::size_t>(s.n()) + 1)
    throw ContractViolation("make_two_color_oracle: 2^m must be >= n+1");
  if (c_l == c_h) throw ContractViolation("make_two_color_oracle: colors must differ");
  OracleHandle h;
  h.kind = QueryKind::two_color;
  h.query_dims.assign(static_cast<std::size_t>(s.n()), 2);
  h.modulus = 1 << m;
  h.value = [s, c_l, c_h](const std::vector<int>& x) {
    Bits bits(x.begin(), x.end());
    return static_cast<long long>(black_peg(s, two_color_query_string(s.game(), bits, c_l, c_h)));
  };
  h.charges = {{QueryKind::two_color, 1}, {QueryKind::black_peg, 1}};
  return h;
}

OracleHandle make_padded_oracle(const OracleHandle& inner, int n) {
  if (inner.kind != QueryKind::black_peg)
    throw ContractViolation("make_padded_oracle: inner handle must be a black-peg oracle");
  const int m = static_cast<int>(inner.query_dims.size());
  if (n <= m) throw ContractViolation("make_padded_oracle: requires n > m");
  if (inner.modulus < n + 1)
    throw ContractViolation("make_padded_oracle: inner modulus must be >= n+1");
  const int k = inner.query_dims.front();
  if (k < 2) throw ContractViolation("make_padded_oracle: inner alphabet must have k >= 2");

  OracleHandle h;
  h.kind = QueryKind::padded;
  h.query_dims.assign(static_cast<std::size_t>(n), k);
  h.modulus = inner.modulus;
  const auto inner_value = inner.value;
  h.value = [inner_value, m, n](const std::vector<int>& x) {
    const std::vector<int> head(x.begin(), x.begin() + m);
    // First inner call computes the scratch value, the adder folds in the
    // tail matches against the 1-padding, the second call uncomputes.
    const long long scratch = inner_value(head);
    long long tail = 0;
    for (int i = m; i < n; ++i)
      if (x[static_cast<std::size_t>(i)] == 1) ++tail;
    if (inner_value(head) != scratch)
      throw std::logic_error("padded oracle: scratch value failed to uncompute");
    return scratch + tail;
  };
  h.charges = {{QueryKind::padded, 1}, {QueryKind::black_peg, 2}};
  return h;
}

OracleHandle make_ipt_oracle(const Secret& s) {
  OracleHandle h;
  h.kind = QueryKind::ipt;
  h.query_dims.assign(static_cast<std::size_t>(s.n()), 2);
  h.modulus = s.k();
  h.value = [s](const std::vector<int>& x) { return ipt_via_feedback(s, x); };
  h.charges = {{QueryKind::ipt, 1}, {QueryKind::black_peg, s.k()}};
  return h;
}

OracleHandle make_ipk_oracle(const Secret& s) {
  const int k = s.k();
  const int slices = ceil_log2(k) > 0 ? ceil_log2(k) : 1;
  OracleHandle h;
  h.kind = QueryKind::ipk;
  h.query_dims.assign(static_cast<std::size_t>(s.n()), k);
  h.modulus = k;
  h.value = [s, k, slices](const std::vector<int>& x) {
    // IPK through binary digit slices: sum_j 2^{j-1} IPT_s(x(j)) mod k.
    long long acc = 0;
    std::vector<int> slice(x.size());
    for (int j = 0; j < slices; ++j) {
      for (std::size_t i = 0; i < x.size(); ++i) slice[i] = (x[i] >> j) & 1;
      const long long ipt = ipt_via_feedback(s, slice);
      acc = (acc + ((1LL << j) % k) * ipt) % k;
    }
    return acc;
  };
  h.charges = {{QueryKind::ipk, 1},
               {QueryKind::ipt, slices},
               {QueryKind::black_peg, static_cast<long long>(k) * slices}};
  return h;
}

OracleHandle make_hamming_parity_oracle(const Secret& a) {
  if (a.k() <= 4)
    throw ContractViolation("make_hamming_parity_oracle: only the k > 4 regime is implemented");
  OracleHandle h;
  h.kind = QueryKind::hamming_parity;
  h.query_dims.assign(static_cast<std::size_t>(a.n()), a.k());
  h.modulus = 2;
  h.value = [a](const std::vector<int>& x) {
    long long dist = 0;
    for (int i = 0; i < a.n(); ++i)
      if (x[static_cast<std::size_t>(i)] != a[i]) ++dist;
    return dist % 2;
  };
  h.charges = {{QueryKind::hamming_parity, 1}};
  return h;
}

OracleHandle make_bw_subset_parity_oracle(const Secret& s, const std::vector<Color>& subset,
                                          int b1) {
  // Validates the subset and b1 eagerly by evaluating the all-zero input.
  (void)bw_inner_product(s, subset, Bits(subset.size(), 0), b1);
  OracleHandle h;
  h.kind = QueryKind::black_white_peg;
  h.query_dims.assign(subset.size(), 2);
  h.modulus = 2;
  h.value = [s, subset, b1](const std::vector<int>& y) {
    Bits bits(y.begin(), y.end());
    return static_cast<long long>(bw_inner_product(s, subset, bits, b1) % 2);
  };
  h.charges = {{QueryKind::black_white_peg, 2}};
  return h;
}

}  // namespace mmq
