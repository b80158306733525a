#pragma once

// Factories for every quantum oracle used by the drivers. Each oracle is a
// classical reversible action on the simulator: the query registers are left
// untouched and the answer value g(x) is added to the last register modulo
// its dimension, |x>|b> -> |x>|b (+)_M g(x)>. Applying a handle charges its
// ledger with the oracle's full conversion cost.

#include <cstdint>
#include <functional>
#include <vector>

#include "mmq/game.hpp"
#include "mmq/ledger.hpp"
#include "mmq/sim.hpp"

namespace mmq {

/// A bound oracle: the classical value function, the layout it acts on, and
/// the charge rule. Immutable and shareable; the ledger is supplied per
/// application.
struct OracleHandle {
  QueryKind kind = QueryKind::black_peg;
  std::vector<int> query_dims;  // dimensions of the query registers
  int modulus = 0;              // dimension of the answer register
  std::function<long long(const std::vector<int>&)> value;  // g(x) on query digits
  std::vector<Charge> charges;  // charged once per application, forward or inverse

  /// Applies |x>|b> -> |x>|b (+)_M g(x)> (modular subtraction when inverse)
  /// to a state whose registers are the query registers followed by the
  /// answer register. Charges the ledger.
  void apply(StateVector& state, QueryLedger& ledger, bool inverse = false) const;

  /// Classical evaluation of g on one query tuple. Uncharged; tests use it
  /// to cross-check the quantum action.
  long long evaluate(const std::vector<int>& query_digits) const { return value(query_digits); }

  /// The layout this handle acts on: query registers plus answer register.
  RegisterLayout layout() const;
};

/// |x>|b> -> |x>|b (+)_M B_s(x)> on n k-ary query registers. Requires
/// M >= n+1 so no feedback information is lost.
OracleHandle make_black_peg_oracle(const Secret& s, int ancilla_modulus);

/// The two-color oracle B_s^(cl,ch) on n binary query registers with a
/// 2^m-dimensional answer register, evaluated as B_s(y^x) through
/// two_color_query_string. One black-peg query per application.
OracleHandle make_two_color_oracle(const Secret& s, Color c_l, Color c_h, int m);

/// The black-peg oracle of the padded secret s' = s . 1^{n-m} built from the
/// inner oracle for s of length m: computes B_s(x[1..m]) into a scratch
/// value, adds sum_{i>m} delta_{1,x_i}, and uncomputes the scratch with a
/// second inner call. Two black-peg queries per application. The answer
/// modulus is inherited from the inner oracle and must be >= n+1.
OracleHandle make_padded_oracle(const OracleHandle& inner, int n);

/// |x>|y> -> |x>|(y + IPT_s(x)) mod k> for x in [2]^n, where
/// IPT_s(x) = sum_i s_i x_i mod k. Evaluated through the k parallel feedback
/// counts n_c = B_s(y^c): with a = |{i not in V : s_i = 0}| the counts obey
/// sum_c n_c = |V| + k a, giving v_c = n_c - (sum_c n_c - |V|)/k and
/// IPT = sum_c c v_c mod k. k black-peg queries per application.
OracleHandle make_ipt_oracle(const Secret& s);

/// |x>|y> -> |x>|(IPK_s(x) + y) mod k> for x in [k]^n, evaluated as
/// sum_j 2^{j-1} IPT_s(x(j)) mod k over the binary digit slices x(j).
/// k ceil(log2 k) black-peg queries per application.
OracleHandle make_ipk_oracle(const Secret& s);

/// |x>|b> -> |x>|b XOR h_a(x)> with h_a(x) = dist(x, a) mod 2 on a binary
/// answer register. Only the k > 4 regime is implemented.
OracleHandle make_hamming_parity_oracle(const Secret& a);

/// |y>|b> -> |y>|b XOR (x^(T,s) . y mod 2)> over |T| binary query registers,
/// evaluated through bw_inner_product with the cached b1 = B_s(1^n). Each
/// coherent application charges two black-white-peg queries (feedback
/// compute plus uncompute).
OracleHandle make_bw_subset_parity_oracle(const Secret& s, const std::vector<Color>& subset,
                                          int b1);

}  // namespace mmq
