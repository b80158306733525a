#include "mmq/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "mmq/errors.hpp"

namespace mmq {

namespace {

int ceil_log2(int v) {
  int bits = 0;
  while ((1 << bits) < v) ++bits;
  return bits;
}

Bits to_bits(const std::vector<int>& digits) {
  Bits bits(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) bits[i] = static_cast<std::uint8_t>(digits[i]);
  return bits;
}

struct GroverOutcome {
  std::vector<int> digits;
  double probability = 0.0;
  GroverParams params;
};

/// T iterations of O(phi) = B^dagger (I x D(phi)) B followed by the
/// per-register zero reflection, after QFT_k on every query register. The
/// phase e^{i j phi} acts on the answer value j = g(x), so the evolution
/// factorizes into n independent exact searches for one item among k.
GroverOutcome exact_grover_core(const OracleHandle& oracle, QueryLedger& ledger) {
  const int n = static_cast<int>(oracle.query_dims.size());
  if (n < 1) throw ContractViolation("exact_grover_core: oracle has no query registers");
  const int k = oracle.query_dims.front();
  for (int d : oracle.query_dims)
    if (d != k) throw ContractViolation("exact_grover_core: query registers must share one dimension");
  if (oracle.modulus < n + 1)
    throw ContractViolation("exact_grover_core: answer modulus must be >= n+1");

  GroverOutcome out;
  out.params = grover_params(k);
  StateVector state(oracle.layout(), std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (int r = 0; r < n; ++r) apply_qft(state, r);
  for (long long t = 0; t < out.params.iterations; ++t) {
    oracle.apply(state, ledger);
    apply_diagonal_phase_on_value(state, n, out.params.phi);
    oracle.apply(state, ledger, /*inverse=*/true);
    for (int r = 0; r < n; ++r) apply_zero_reflection(state, r, out.params.phi);
  }
  auto [digits, probability] = argmax_prefix_marginal(state, n);
  out.digits = std::move(digits);
  out.probability = probability;
  return out;
}

/// Black-peg oracle over the restricted alphabet C_s: query digit i indexes
/// into the sorted occupied-color list. One black-peg query per application.
OracleHandle make_remapped_black_peg_oracle(const Secret& s, std::vector<Color> colors) {
  const GameInstance game = s.game();
  OracleHandle h;
  h.kind = QueryKind::black_peg;
  h.query_dims.assign(static_cast<std::size_t>(game.n), static_cast<int>(colors.size()));
  h.modulus = game.n + 1;
  h.charges = {Charge{QueryKind::black_peg, 1}};
  h.value = [s, game, colors = std::move(colors)](const std::vector<int>& x) -> long long {
    std::vector<Color> mapped(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      mapped[i] = colors.at(static_cast<std::size_t>(x[i]));
    return black_peg(s, Query(game, std::move(mapped)));
  };
  return h;
}

RunResult run_two_color_plan(const Secret& s, const std::vector<TwoColorCircuitSpec>& circuits,
                             const std::function<Secret(const std::vector<PairRow>&)>& reconstruct) {
  const GameInstance game = s.game();
  const int m = ceil_log2(game.n + 1);
  QueryLedger ledger;
  double success = 1.0;
  std::vector<PairRow> rows;
  rows.reserve(circuits.size());
  for (const TwoColorCircuitSpec& spec : circuits) {
    const OracleHandle handle = make_two_color_oracle(s, spec.c_l, spec.c_h, m);
    double p = 0.0;
    Bits bits = find_two_color_position(handle, ledger, &p);
    success *= p;
    rows.push_back(PairRow{spec.c_l, spec.c_h, std::move(bits)});
  }
  Secret recovered = reconstruct(rows);
  return RunResult{std::move(recovered), success, std::move(ledger), 0,
                   static_cast<long long>(circuits.size())};
}

}  // namespace

std::vector<TwoColorCircuitSpec> build_star_plan(int k) {
  if (k < 3) throw ContractViolation("build_star_plan: k must be >= 3");
  std::vector<TwoColorCircuitSpec> plan;
  plan.reserve(static_cast<std::size_t>(k) - 1);
  for (Color c = 1; c < k; ++c) plan.push_back(TwoColorCircuitSpec{0, c});
  return plan;
}

TriplePlan build_triple_plan(int k) {
  TriplePlan plan;
  plan.cover = build_triple_cover(k);
  auto circuit_index = [&plan](const TwoColorCircuitSpec& spec) {
    for (std::size_t i = 0; i < plan.circuits.size(); ++i)
      if (plan.circuits[i] == spec) return static_cast<int>(i);
    plan.circuits.push_back(spec);
    return static_cast<int>(plan.circuits.size()) - 1;
  };
  for (const Triple& t : plan.cover.triples) {
    // Sequenced so circuits are discovered (g,l) before (l,h); argument
    // evaluation order inside emplace_back would be unspecified.
    const int low = circuit_index(TwoColorCircuitSpec{t.g, t.l});
    const int high = circuit_index(TwoColorCircuitSpec{t.l, t.h});
    plan.per_triple.emplace_back(low, high);
  }
  return plan;
}

Bits find_two_color_position(const OracleHandle& handle, QueryLedger& ledger,
                             double* success_probability) {
  const int n = static_cast<int>(handle.query_dims.size());
  if (n < 1) throw ContractViolation("find_two_color_position: oracle has no query registers");
  for (int d : handle.query_dims)
    if (d != 2) throw ContractViolation("find_two_color_position: query registers must be binary");
  const int m = ceil_log2(handle.modulus);
  if ((1 << m) != handle.modulus)
    throw ContractViolation("find_two_color_position: answer dimension must be a power of two");

  std::vector<int> digits(static_cast<std::size_t>(n) + 1, 0);
  digits[static_cast<std::size_t>(n)] = 1;  // |0^{m-1} 1>
  StateVector state(handle.layout(), digits);
  const std::vector<Complex> h_m = hadamard_power_matrix(m);
  for (int r = 0; r < n; ++r) apply_qft(state, r);
  apply_single_register_unitary(state, n, h_m);
  handle.apply(state, ledger);
  for (int r = 0; r < n; ++r) apply_qft(state, r);
  apply_single_register_unitary(state, n, h_m);
  auto [out, probability] = argmax_prefix_marginal(state, n);
  if (success_probability != nullptr) *success_probability = probability;
  return to_bits(out);
}

RunResult nonadaptive_k_minus_1(const Secret& s) {
  const GameInstance game = s.game();
  const std::vector<TwoColorCircuitSpec> plan = build_star_plan(game.k);
  return run_two_color_plan(s, plan, [&game](const std::vector<PairRow>& rows) {
    return reconstruct_from_star(game, rows);
  });
}

RunResult nonadaptive_two_thirds(const Secret& s) {
  const GameInstance game = s.game();
  const TriplePlan plan = build_triple_plan(game.k);
  return run_two_color_plan(s, plan.circuits, [&](const std::vector<PairRow>& rows) {
    std::vector<std::pair<PairRow, PairRow>> per_triple;
    per_triple.reserve(plan.per_triple.size());
    for (const auto& [gi, hi] : plan.per_triple)
      per_triple.emplace_back(rows[static_cast<std::size_t>(gi)],
                              rows[static_cast<std::size_t>(hi)]);
    return reconstruct_from_triples(game, plan.cover, per_triple);
  });
}

RunResult one_query_binary(const Secret& s) {
  const GameInstance game = s.game();
  if (game.k != 2) throw ContractViolation("one_query_binary: k must be 2");
  const int m = std::max(2, ceil_log2(game.n + 1));
  const OracleHandle handle = make_black_peg_oracle(s, 1 << m);

  std::vector<int> digits(static_cast<std::size_t>(game.n) + 1, 0);
  digits[static_cast<std::size_t>(game.n)] = 1;  // |0^{m-2} 01>
  StateVector state(handle.layout(), digits);

  // The ancilla transform splits the answer register into m-2 discarded
  // high bits and a QFT_4 pair whose eigenphase i^{-B} kicks back per
  // matching position; modular addition of B respects the split because
  // 4 divides 2^m.
  std::vector<Complex> anc = qft_matrix(4);
  std::vector<Complex> anc_inv = qft_matrix(4, /*inverse=*/true);
  if (m > 2) {
    const std::vector<Complex> h = hadamard_power_matrix(m - 2);
    anc = tensor_product(h, 1 << (m - 2), anc, 4);
    anc_inv = tensor_product(h, 1 << (m - 2), anc_inv, 4);
  }
  for (int r = 0; r < game.n; ++r) apply_qft(state, r);
  apply_single_register_unitary(state, game.n, anc);
  QueryLedger ledger;
  handle.apply(state, ledger);
  // U maps the two kicked-back single-qubit states back to the basis:
  // U (-i|0> + |1>)/sqrt2 = |0>, U (|0> - i|1>)/sqrt2 = |1>.
  const Complex iu(0.0, 1.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> u = {iu * r2, r2, r2, iu * r2};
  for (int r = 0; r < game.n; ++r) apply_single_register_unitary(state, r, u);
  apply_single_register_unitary(state, game.n, anc_inv);

  auto [out, probability] = argmax_prefix_marginal(state, game.n);
  return RunResult{Secret(game, out), probability, std::move(ledger), 0, 1};
}

RunResult adaptive_exact_grover(const Secret& s) {
  const GameInstance game = s.game();
  QueryLedger ledger;
  const OracleHandle oracle = make_black_peg_oracle(s, game.n + 1);
  GroverOutcome out = exact_grover_core(oracle, ledger);
  return RunResult{Secret(game, out.digits), out.probability, std::move(ledger),
                   out.params.iterations, 2 * out.params.iterations};
}

Bits bv_color_subset(const Secret& s, const std::vector<Color>& subset, QueryLedger& ledger,
                     double* success_probability) {
  const GameInstance game = s.game();
  if (subset.empty()) throw ContractViolation("bv_color_subset: subset must be non-empty");
  const int t = static_cast<int>(subset.size());

  // Classical opening query on the all-ones string fixes b1 = B_s(1^n).
  const Query ones(game, std::vector<Color>(static_cast<std::size_t>(game.n), 1));
  const int b1 = black_peg(s, ones);
  ledger.add(QueryKind::black_white_peg, 1);

  const OracleHandle handle = make_bw_subset_parity_oracle(s, subset, b1);
  std::vector<int> digits(static_cast<std::size_t>(t) + 1, 0);
  digits[static_cast<std::size_t>(t)] = 1;
  StateVector state(handle.layout(), digits);
  for (int r = 0; r <= t; ++r) apply_qft(state, r);  // H everywhere; H|1> = |->
  handle.apply(state, ledger);
  for (int r = 0; r <= t; ++r) apply_qft(state, r);
  auto [out, probability] = argmax_prefix_marginal(state, t);
  if (success_probability != nullptr) *success_probability = probability;
  return to_bits(out);
}

RunResult adaptive_black_white(const Secret& s) {
  const GameInstance game = s.game();
  QueryLedger ledger;
  double success = 1.0;
  long long bv_runs = 0;
  std::vector<Color> occupied;
  for (Color base = 0; base < game.k; base += game.n) {
    std::vector<Color> block;
    for (Color c = base; c < std::min(game.k, base + game.n); ++c) block.push_back(c);
    double p = 0.0;
    const Bits indicator = bv_color_subset(s, block, ledger, &p);
    success *= p;
    ++bv_runs;
    for (std::size_t i = 0; i < block.size(); ++i)
      if (indicator[i] != 0) occupied.push_back(block[i]);
  }
  if (occupied.empty()) throw MalformedInput("adaptive_black_white: recovered empty color set");

  long long iterations = 0;
  long long raw = bv_runs;
  std::vector<int> indices;
  double grover_probability = 1.0;
  if (occupied.size() == 1) {
    indices.assign(static_cast<std::size_t>(game.n), 0);
  } else {
    const OracleHandle remapped = make_remapped_black_peg_oracle(s, occupied);
    GroverOutcome out = exact_grover_core(remapped, ledger);
    grover_probability = out.probability;
    iterations = out.params.iterations;
    raw += 2 * out.params.iterations;
    indices = std::move(out.digits);
  }
  std::vector<Color> recovered(static_cast<std::size_t>(game.n));
  for (std::size_t j = 0; j < recovered.size(); ++j)
    recovered[j] = occupied.at(static_cast<std::size_t>(indices[j]));
  return RunResult{Secret(game, std::move(recovered)), success * grover_probability,
                   std::move(ledger), iterations, raw};
}

RunResult fourier_ipk(const Secret& s) {
  const GameInstance game = s.game();
  const OracleHandle handle = make_ipk_oracle(s);
  std::vector<int> digits(static_cast<std::size_t>(game.n) + 1, 0);
  digits[static_cast<std::size_t>(game.n)] = game.k - 1;
  StateVector state(handle.layout(), digits);
  for (int r = 0; r <= game.n; ++r) apply_qft(state, r);
  QueryLedger ledger;
  handle.apply(state, ledger);
  for (int r = 0; r <= game.n; ++r) apply_qft(state, r, /*inverse=*/true);
  auto [out, probability] = argmax_prefix_marginal(state, game.n);
  return RunResult{Secret(game, out), probability, std::move(ledger), 0, 1};
}

HunzikerMeyerResult hunziker_meyer(const Secret& a, long long shots, std::uint64_t seed) {
  const GameInstance game = a.game();
  if (shots < 0) throw ContractViolation("hunziker_meyer: shots must be >= 0");
  const OracleHandle handle = make_hamming_parity_oracle(a);

  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(game.k)));
  const long long rounds = std::llround(0.5 * (std::numbers::pi / (2.0 * theta) - 1.0));

  StateVector state(handle.layout(), std::vector<int>(static_cast<std::size_t>(game.n) + 1, 0));
  const std::vector<Complex> x_gate = {0.0, 1.0, 1.0, 0.0};
  apply_single_register_unitary(state, game.n, x_gate);
  apply_qft(state, game.n);  // ancilla |0> -> |1> -> |->
  for (int r = 0; r < game.n; ++r) apply_qft(state, r);

  QueryLedger ledger;
  for (long long t = 0; t < rounds; ++t) {
    handle.apply(state, ledger);
    for (int r = 0; r < game.n; ++r)
      apply_zero_reflection(state, r, std::numbers::pi);  // I - 2|u><u| per register
  }

  const double success = peek_probability(state, a.digits());
  auto [out, argmax_probability] = argmax_prefix_marginal(state, game.n);
  (void)argmax_probability;

  double rate = 0.0;
  if (shots > 0) {
    std::mt19937_64 rng(seed);
    long long hits = 0;
    for (long long i = 0; i < shots; ++i) {
      const std::vector<int> sample = measure_all(state, rng);
      if (std::equal(a.digits().begin(), a.digits().end(), sample.begin())) ++hits;
    }
    rate = static_cast<double>(hits) / static_cast<double>(shots);
  }
  return HunzikerMeyerResult{Secret(game, out), success, rate, shots, rounds, std::move(ledger)};
}

RunResult run_via_padded_oracle(const Secret& s, int n) {
  const GameInstance inner_game = s.game();
  if (n <= inner_game.n)
    throw ContractViolation("run_via_padded_oracle: n must exceed the inner secret length");
  const OracleHandle inner = make_black_peg_oracle(s, n + 1);
  const OracleHandle padded = make_padded_oracle(inner, n);
  QueryLedger ledger;
  GroverOutcome out = exact_grover_core(padded, ledger);
  return RunResult{Secret(GameInstance(n, inner_game.k), out.digits), out.probability,
                   std::move(ledger), out.params.iterations, 2 * out.params.iterations};
}

}  // namespace mmq
