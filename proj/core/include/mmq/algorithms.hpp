#pragma once

// End-to-end drivers for every algorithm: each returns the recovered secret,
// the final success probability read from the pre-measurement state, and the
// query ledger. Exact drivers reach success probability 1 up to rounding;
// readout is the argmax of the first-n-register marginal, so no sampling is
// involved.

#include <cstdint>
#include <utility>
#include <vector>

#include "mmq/game.hpp"
#include "mmq/ledger.hpp"
#include "mmq/oracles.hpp"
#include "mmq/sim.hpp"

namespace mmq {

struct RunResult {
  Secret recovered;
  double success_probability = 0.0;
  QueryLedger ledger;
  long long iterations = 0;             // Grover iterations, where applicable
  long long raw_oracle_invocations = 0; // oracle applications counting adjoints
};

/// One two-color circuit of a non-adaptive plan.
struct TwoColorCircuitSpec {
  Color c_l = 0;
  Color c_h = 0;

  friend bool operator==(const TwoColorCircuitSpec&, const TwoColorCircuitSpec&) = default;
};

/// The full circuit list of the k-1 algorithm, a function of k alone: pairs
/// (c_1, c_i) anchored on color 0. Built before any oracle answer exists,
/// which is what makes the strategy non-adaptive.
std::vector<TwoColorCircuitSpec> build_star_plan(int k);

/// The circuit list of the 2 ceil(k/3) algorithm: per triple (c_g, c_l, c_h)
/// the pairs (c_g, c_l) and (c_l, c_h), deduplicated so a pair shared with
/// the previous triple is executed once. Also a function of k alone.
struct TriplePlan {
  TripleCover cover;
  std::vector<TwoColorCircuitSpec> circuits;
  std::vector<std::pair<int, int>> per_triple;  // circuit indices per triple
};
TriplePlan build_triple_plan(int k);

/// Runs H^n x H^m, the two-color oracle, H^n x H^m on |0...0>|0^{m-1}1> and
/// reads M^(cl,ch) from the first n registers with certainty. When
/// success_probability is non-null it receives the readout marginal.
Bits find_two_color_position(const OracleHandle& handle, QueryLedger& ledger,
                             double* success_probability = nullptr);

/// The k-1 black-peg non-adaptive driver (k >= 3): star plan, k-1 two-color
/// circuits, star reconstruction.
RunResult nonadaptive_k_minus_1(const Secret& s);

/// The at-most-2 ceil(k/3) black-peg non-adaptive driver (k >= 3): triple
/// plan with shared circuits executed once, triple reconstruction.
RunResult nonadaptive_two_thirds(const Secret& s);

/// The one-query driver for k = 2: ancilla in |0^{m-2}01>, H^n x H^{m-2} x
/// QFT_4, one black-peg query, U^n x H^{m-2} x QFT_4^dagger with
/// U = (1/sqrt 2)[[i, 1], [1, i]].
RunResult one_query_binary(const Secret& s);

/// The adaptive exact-Grover driver: T iterations of O_s(phi) then S_0(phi)
/// after QFT_k^n, with the parameters of grover_params(k). The ledger counts
/// 2T raw black-peg invocations (B_s and B_s^dagger); iterations reports T.
RunResult adaptive_exact_grover(const Secret& s);

/// One classical black-white-peg query on 1^n followed by one
/// Bernstein-Vazirani pass against the subset parity oracle; returns x^(T,s)
/// with certainty. Charges 3 black-white-peg per run: 1 classical plus the
/// coherent compute/uncompute pair.
Bits bv_color_subset(const Secret& s, const std::vector<Color>& subset, QueryLedger& ledger,
                     double* success_probability = nullptr);

/// The black-white-peg driver: learns C_s from ceil(k/n) disjoint color
/// blocks via bv_color_subset, then runs the exact Grover stage over the
/// alphabet C_s through a color-remapping black-peg wrapper. |C_s| = 1 skips
/// the Grover stage entirely.
RunResult adaptive_black_white(const Secret& s);

/// The k ceil(log2 k) driver: |0>^n |k-1> over n+1 k-ary registers,
/// QFT_k^(n+1), one IPK oracle application, inverse QFT_k^(n+1).
RunResult fourier_ipk(const Secret& s);

struct HunzikerMeyerResult {
  Secret recovered;
  double success_probability = 0.0;     // exact, from the final state
  double empirical_success_rate = 0.0;  // only meaningful when shots > 0
  long long shots = 0;
  long long queries = 0;                // Grover rounds = oracle applications
  QueryLedger ledger;
};

/// The bounded-error reference algorithm (k > 4): round((pi / (2 arcsin
/// (1/sqrt k)) - 1) / 2) plain Grover rounds with the Hamming-distance
/// parity oracle and the I - 2|0><0| diffusion. Reports the exact success
/// probability from the final state; when shots > 0 also samples final
/// measurements with the seeded generator.
HunzikerMeyerResult hunziker_meyer(const Secret& a, long long shots = 0,
                                   std::uint64_t seed = 20260822);

/// Runs the adaptive exact-Grover driver for the (k, n) problem against the
/// padded oracle built from B_s with s of length m < n; recovers s . 1^{n-m}.
RunResult run_via_padded_oracle(const Secret& s, int n);

}  // namespace mmq
