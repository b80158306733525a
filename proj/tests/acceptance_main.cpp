// Acceptance gate: every published claim checked at desk scale, one line of
// output per criterion, exit code equal to the number of failures.
// Tolerances: 1e-12 for algebraic identities, 1e-9 for success probability.

#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mmq/algorithms.hpp"
#include "mmq/baselines.hpp"
#include "mmq/game.hpp"
#include "mmq/oracles.hpp"
#include "mmq/sim.hpp"

using namespace mmq;
using mmq::testing::advance_digits;
using mmq::testing::all_codes;

namespace {

constexpr double kPi = std::numbers::pi;

/// Collects the first failure reason of one criterion.
struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& reason) {
    if (condition) return;
    if (ok) detail = reason;
    ok = false;
  }
};

std::string describe(const VerifierReport& r) {
  std::ostringstream out;
  out << r.algorithm << " n=" << r.n << " k=" << r.k << " runs=" << r.runs
      << " min_success=" << r.min_success << " queries=[" << r.min_queries << ","
      << r.max_queries << "] bound=" << r.bound;
  if (!r.failures.empty()) out << " first_failure: " << r.failures.front();
  return out.str();
}

long long ceil_log2(int k) {
  long long bits = 0;
  while ((1LL << bits) < k) ++bits;
  return bits;
}

// 1. Star driver: every secret recovered with certainty, black-peg ledger
//    exactly k-1, for k in {3..6}, n in {1..4}.
Checker criterion_star() {
  Checker c;
  for (int k = 3; k <= 6; ++k) {
    for (int n = 1; n <= 4; ++n) {
      const VerifierReport r = exhaustive_verifier("nonadaptive-k1", n, k);
      c.expect(r.passed(), describe(r));
      c.expect(r.min_queries == k - 1 && r.max_queries == k - 1,
               "query count not k-1: " + describe(r));
      c.expect(r.min_success >= 1.0 - kSuccessTolerance, describe(r));
      const SingleRunResult spot =
          run_algorithm_once("nonadaptive-k1",
                             Code(GameInstance(n, k), std::vector<Color>(
                                                          static_cast<std::size_t>(n), 0)));
      c.expect(spot.ledger.count(QueryKind::black_peg) == k - 1,
               "ledger black_peg != k-1 at n=" + std::to_string(n) +
                   " k=" + std::to_string(k));
    }
  }
  return c;
}

// 2. Triple driver: same sweep within 2*ceil(k/3); k=4 measures 3 because the
//    shared circuit runs once.
Checker criterion_triple() {
  Checker c;
  for (int k = 3; k <= 6; ++k) {
    for (int n = 1; n <= 4; ++n) {
      const VerifierReport r = exhaustive_verifier("nonadaptive-2k3", n, k);
      c.expect(r.passed(), describe(r));
      c.expect(r.max_queries <= 2 * ((k + 2) / 3), "bound exceeded: " + describe(r));
      c.expect(r.min_success >= 1.0 - kSuccessTolerance, describe(r));
      if (k == 4)
        c.expect(r.min_queries == 3 && r.max_queries == 3,
                 "k=4 overlap saving missed: " + describe(r));
    }
  }
  return c;
}

// 3. Binary driver: exactly one query for k=2 up to n=10, full sweep through
//    n=8 and 256 seeded samples above.
Checker criterion_binary() {
  Checker c;
  VerifierConfig config;
  config.full_sweep_budget = 256;
  for (int n = 1; n <= 10; ++n) {
    const VerifierReport r = exhaustive_verifier("one-query-binary", n, 2, config);
    c.expect(r.passed(), describe(r));
    c.expect(r.min_queries == 1 && r.max_queries == 1, "query count not 1: " + describe(r));
    c.expect(r.sampled == (n > 8), "sampling flag wrong: " + describe(r));
    c.expect(r.runs == (n <= 8 ? (1LL << n) : 256), "run count wrong: " + describe(r));
  }
  return c;
}

// 4. Exact search driver: certainty for k in {2..8}, n in {1..3}, iteration
//    count equal to ceil(pi / (4 asin(sqrt(1/k))) - 1/2), spot values
//    T(4)=1, T(6)=2, T(8)=2.
Checker criterion_exact_search() {
  Checker c;
  for (int k = 2; k <= 8; ++k) {
    const double raw = kPi / (4.0 * std::asin(std::sqrt(1.0 / k))) - 0.5;
    const long long expected_t = static_cast<long long>(std::ceil(raw - 1e-9));
    c.expect(grover_params(k).iterations == expected_t,
             "iteration formula mismatch at k=" + std::to_string(k));
    for (int n = 1; n <= 3; ++n) {
      if (static_cast<long long>(std::pow(k, n)) * (n + 1) > (1LL << 16)) continue;
      const VerifierReport r = exhaustive_verifier("adaptive-grover", n, k);
      c.expect(r.passed(), describe(r));
      c.expect(r.min_success >= 1.0 - kSuccessTolerance, describe(r));
      c.expect(r.min_queries == expected_t && r.max_queries == expected_t,
               "iterations deviate from the formula: " + describe(r));
    }
  }
  c.expect(grover_params(4).iterations == 1, "T(4) != 1");
  c.expect(grover_params(6).iterations == 2, "T(6) != 2");
  c.expect(grover_params(8).iterations == 2, "T(8) != 2");
  return c;
}

// 5. Phase oracle identity: B_s forward, D(phi) on the ancilla, B_s inverse
//    acts on |x>|0> as multiplication by e^{i phi B_s(x)}, within 1e-12,
//    for all basis states with n <= 3, k <= 4.
Checker criterion_phase_identity() {
  Checker c;
  for (int k = 2; k <= 4; ++k) {
    const double phi = grover_params(k).phi;
    for (int n = 1; n <= 3; ++n) {
      const GameInstance game(n, k);
      for (const Code& s : all_codes(game)) {
        const OracleHandle handle = make_black_peg_oracle(s, n + 1);
        for (const Code& x : all_codes(game)) {
          std::vector<int> digits(x.digits().begin(), x.digits().end());
          digits.push_back(0);
          StateVector state = init_basis_state(handle.layout(), digits);
          QueryLedger ledger;
          handle.apply(state, ledger);
          apply_diagonal_phase_on_value(state, n, phi);
          handle.apply(state, ledger, /*inverse=*/true);

          const Complex expected_amp = std::exp(Complex(0, phi * black_peg(s, x)));
          const std::size_t target = handle.layout().index_of(digits);
          double worst = 0.0;
          for (std::size_t i = 0; i < state.amplitudes().size(); ++i) {
            const Complex expected = (i == target) ? expected_amp : Complex(0, 0);
            worst = std::max(worst, std::abs(state.amplitudes()[i] - expected));
          }
          c.expect(worst < 1e-12, "phase action deviates at n=" + std::to_string(n) +
                                      " k=" + std::to_string(k));
          if (!c.ok) return c;
        }
      }
    }
  }
  return c;
}

// 6. Fourier driver: exact with black-peg ledger k*ceil(log2 k) for k in
//    {2..5}, n in {1..3}; the feedback-count identity is asserted inside
//    every IPT evaluation; digit-slice recomposition equals the direct mod-k
//    dot product exhaustively for n <= 4, k <= 5.
Checker criterion_fourier() {
  Checker c;
  for (int k = 2; k <= 5; ++k) {
    for (int n = 1; n <= 3; ++n) {
      const VerifierReport r = exhaustive_verifier("klogk", n, k);
      c.expect(r.passed(), describe(r));
      c.expect(r.min_success >= 1.0 - kSuccessTolerance, describe(r));
      const long long cost = static_cast<long long>(k) * ceil_log2(k);
      c.expect(r.min_queries == cost && r.max_queries == cost,
               "black-peg charge not k*ceil(log2 k): " + describe(r));
    }
  }
  for (int k = 2; k <= 5; ++k) {
    for (int n = 1; n <= 4; ++n) {
      const GameInstance game(n, k);
      for (const Code& s : all_codes(game)) {
        const OracleHandle ipk = make_ipk_oracle(s);
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        do {
          long long direct = 0;
          for (int i = 0; i < n; ++i)
            direct += static_cast<long long>(s[i]) * x[static_cast<std::size_t>(i)];
          if (ipk.evaluate(x) != direct % k) {
            c.expect(false, "slice recomposition deviates at n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
            return c;
          }
        } while (advance_digits(x, k));
      }
    }
  }
  return c;
}

// 7. Black-white pipeline: exact on sampled secrets for k in {6,8,9}, n in
//    {2,3,4}; ledger within 3*ceil(k/n); the search stage is sized by the
//    occupied colors, not by k.
Checker criterion_pipeline() {
  Checker c;
  for (int k : {6, 8, 9}) {
    for (int n = 2; n <= 4; ++n) {
      const VerifierReport r = exhaustive_verifier("adaptive-bw", n, k);
      c.expect(r.passed(), describe(r));
      c.expect(r.max_queries <= 3 * ((k + n - 1) / n), "bound exceeded: " + describe(r));

      const GameInstance game(n, k);
      const RunResult mono =
          adaptive_black_white(Code(game, std::vector<Color>(static_cast<std::size_t>(n), 0)));
      c.expect(mono.iterations == 0, "single-color secret still iterates");

      std::vector<Color> two(static_cast<std::size_t>(n), 0);
      two[0] = 1;
      const RunResult pair = adaptive_black_white(Code(game, two));
      c.expect(pair.iterations == grover_params(2).iterations,
               "iterations not sized by the occupied colors at n=" + std::to_string(n) +
                   " k=" + std::to_string(k));
      c.expect(pair.iterations != grover_params(k).iterations,
               "iterations indistinguishable from full-k sizing at k=" + std::to_string(k));
    }
  }
  return c;
}

// 8. Bounded-error reference: success at least 1/2 + eps whenever
//    n <= -k ln(1/2 + eps), query count floor(pi sqrt(k) / 4), and at least
//    one configuration below certainty.
Checker criterion_bounded_error() {
  Checker c;
  bool saw_non_exact = false;
  for (int k = 5; k <= 10; ++k) {
    const long long expected_queries =
        static_cast<long long>(std::floor(kPi * std::sqrt(static_cast<double>(k)) / 4.0));
    for (const double eps : {0.1, 0.25, 0.4}) {
      const int n_max = static_cast<int>(std::floor(-k * std::log(0.5 + eps)));
      for (int n = 1; n <= n_max; ++n) {
        const GameInstance game(n, k);
        const HunzikerMeyerResult r =
            hunziker_meyer(Code(game, std::vector<Color>(static_cast<std::size_t>(n), 0)));
        c.expect(r.success_probability >= 0.5 + eps,
                 "success below the floor at n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " eps=" + std::to_string(eps));
        c.expect(r.queries == expected_queries,
                 "query count not floor(pi sqrt(k)/4) at k=" + std::to_string(k));
        saw_non_exact = saw_non_exact || r.success_probability < 1.0 - kSuccessTolerance;
      }
    }
  }
  c.expect(saw_non_exact, "no configuration witnessed non-exactness");
  return c;
}

// 9. Padded oracle: its action equals the oracle of the one-extended secret
//    on every basis state for (k,m,n) in {(3,1,2),(3,2,3),(4,1,2)}, and the
//    padded run recovers s.1^{n-m} for every inner secret.
Checker criterion_padded() {
  Checker c;
  const int cases[3][3] = {{3, 1, 2}, {3, 2, 3}, {4, 1, 2}};
  for (const auto& kmn : cases) {
    const int k = kmn[0];
    const int m = kmn[1];
    const int n = kmn[2];
    const GameInstance inner_game(m, k);
    for (const Code& s : all_codes(inner_game)) {
      const OracleHandle padded = make_padded_oracle(make_black_peg_oracle(s, n + 1), n);
      std::vector<Color> extended = s.digits();
      extended.resize(static_cast<std::size_t>(n), 1);
      const Code padded_secret(GameInstance(n, k), extended);
      const OracleHandle direct = make_black_peg_oracle(padded_secret, n + 1);
      c.expect(padded.modulus == direct.modulus, "padded modulus mismatch");
      std::vector<int> x(static_cast<std::size_t>(n), 0);
      do {
        if (padded.evaluate(x) != direct.evaluate(x)) {
          c.expect(false, "padded action deviates at k=" + std::to_string(k) +
                              " m=" + std::to_string(m) + " n=" + std::to_string(n));
          return c;
        }
      } while (advance_digits(x, k));

      const RunResult run = run_via_padded_oracle(s, n);
      c.expect(run.recovered == padded_secret,
               "padded run misses the one-extended secret at k=" + std::to_string(k));
      c.expect(run.success_probability >= 1.0 - kSuccessTolerance,
               "padded run below certainty at k=" + std::to_string(k));
    }
  }
  return c;
}

// 10. Classical layer: the multiset white-peg formula equals permutation
//     brute force exhaustively for n <= 4, k <= 4; star and triple
//     reconstructions round-trip every secret for n <= 5, k <= 6.
Checker criterion_classical() {
  Checker c;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 2; k <= 4; ++k) {
      const GameInstance game(n, k);
      const std::vector<Code> codes = all_codes(game);
      for (const Code& s : codes)
        for (const Code& x : codes)
          if (white_peg(s, x) != permutation_white_peg(s, x)) {
            c.expect(false, "white-peg formulas disagree at n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
            return c;
          }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int k = 3; k <= 6; ++k) {
      const GameInstance game(n, k);
      for (const Code& s : all_codes(game)) {
        const CharacteristicMatrix matrix = characteristic_matrix(s);
        auto pair_row = [&matrix](Color a, Color b) {
          PairRow row{a, b, Bits(static_cast<std::size_t>(matrix.n), 0)};
          for (int j = 0; j < matrix.n; ++j)
            row.bits[static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>(matrix.at(a, j) | matrix.at(b, j));
          return row;
        };
        std::vector<PairRow> star_rows;
        for (Color color = 1; color < k; ++color) star_rows.push_back(pair_row(0, color));
        const TripleCover cover = build_triple_cover(k);
        std::vector<std::pair<PairRow, PairRow>> triple_rows;
        for (const Triple& t : cover.triples)
          triple_rows.emplace_back(pair_row(t.g, t.l), pair_row(t.l, t.h));
        if (reconstruct_from_star(game, star_rows) != s ||
            reconstruct_from_triples(game, cover, triple_rows) != s) {
          c.expect(false, "reconstruction round-trip fails at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
          return c;
        }
      }
    }
  }
  return c;
}

void run_criterion(int index, const char* label, Checker (*criterion)(), int& failures) {
  Checker result;
  try {
    result = criterion();
  } catch (const std::exception& e) {
    result.ok = false;
    result.detail = std::string("exception: ") + e.what();
  }
  std::printf("[%2d/10] %s  %s\n", index, result.ok ? "PASS" : "FAIL", label);
  if (!result.ok) {
    ++failures;
    if (!result.detail.empty()) std::printf("        detail: %s\n", result.detail.c_str());
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  int failures = 0;
  run_criterion(1, "star driver: exact with k-1 two-color queries", &criterion_star, failures);
  run_criterion(2, "triple driver: exact within 2*ceil(k/3), k=4 measures 3", &criterion_triple,
                failures);
  run_criterion(3, "binary driver: exact with a single query", &criterion_binary, failures);
  run_criterion(4, "exact search driver: certainty at the pinned iteration counts",
                &criterion_exact_search, failures);
  run_criterion(5, "phase oracle identity holds on every basis state", &criterion_phase_identity,
                failures);
  run_criterion(6, "fourier driver: exact at k*ceil(log2 k) with internal identities",
                &criterion_fourier, failures);
  run_criterion(7, "black-white pipeline: exact, bounded, sized by occupied colors",
                &criterion_pipeline, failures);
  run_criterion(8, "bounded-error reference: floor respected, non-exactness witnessed",
                &criterion_bounded_error, failures);
  run_criterion(9, "padded oracle: matches the one-extended secret and its run",
                &criterion_padded, failures);
  run_criterion(10, "classical layer: white-peg equivalence and reconstruction round-trips",
                &criterion_classical, failures);
  return failures;
}
