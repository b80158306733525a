#include "mmq/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>

#include "mmq/algorithms.hpp"
#include "mmq/errors.hpp"
#include "mmq/serialization.hpp"

namespace mmq {

namespace {

int ceil_log2(int v) {
  int bits = 0;
  while ((1 << bits) < v) ++bits;
  return bits;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

long long hunziker_rounds(int k) {
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(k)));
  return std::llround(0.5 * (std::numbers::pi / (2.0 * theta) - 1.0));
}

struct RunOutcome {
  Secret recovered;
  double success = 0.0;
  QueryLedger ledger;
  long long iterations = 0;
};

struct AlgorithmSpec {
  const char* name;
  const char* unit;  // the unit queries and bound are stated in
  bool exact;
  bool padded;  // secrets have length n-1; expected recovery appends a 1
  void (*validate)(int n, int k);
  long long (*bound)(int n, int k);
  long long (*metric)(const RunOutcome&);  // queries in `unit` units
  RunOutcome (*run)(const Secret& s);
};

void require_k_at_least(int k, int minimum, const char* name) {
  if (k < minimum)
    throw ContractViolation(std::string(name) + ": k must be >= " + std::to_string(minimum));
}

constexpr auto wrap = [](RunResult r) {
  return RunOutcome{std::move(r.recovered), r.success_probability, std::move(r.ledger),
                    r.iterations};
};

long long count_two_color(const RunOutcome& out) { return out.ledger.count(QueryKind::two_color); }
long long count_black(const RunOutcome& out) { return out.ledger.count(QueryKind::black_peg); }
long long count_bw(const RunOutcome& out) {
  return out.ledger.count(QueryKind::black_white_peg);
}
long long count_hamming(const RunOutcome& out) {
  return out.ledger.count(QueryKind::hamming_parity);
}
long long count_iterations(const RunOutcome& out) { return out.iterations; }

const AlgorithmSpec kAlgorithms[] = {
    {"nonadaptive-k1", "two_color", true, false,
     [](int, int k) { require_k_at_least(k, 3, "nonadaptive-k1"); },
     [](int, int k) { return static_cast<long long>(k) - 1; }, count_two_color,
     [](const Secret& s) { return wrap(nonadaptive_k_minus_1(s)); }},
    {"nonadaptive-2k3", "two_color", true, false,
     [](int, int k) { require_k_at_least(k, 3, "nonadaptive-2k3"); },
     [](int, int k) { return 2LL * ceil_div(k, 3); }, count_two_color,
     [](const Secret& s) { return wrap(nonadaptive_two_thirds(s)); }},
    {"one-query-binary", "black_peg", true, false,
     [](int, int k) {
       if (k != 2) throw ContractViolation("one-query-binary: k must be 2");
     },
     [](int, int) { return 1LL; }, count_black,
     [](const Secret& s) { return wrap(one_query_binary(s)); }},
    {"adaptive-grover", "iterations", true, false,
     [](int, int k) { require_k_at_least(k, 2, "adaptive-grover"); },
     [](int, int k) { return grover_params(k).iterations; }, count_iterations,
     [](const Secret& s) { return wrap(adaptive_exact_grover(s)); }},
    {"adaptive-bw", "black_white_peg", true, false,
     [](int, int k) { require_k_at_least(k, 2, "adaptive-bw"); },
     [](int n, int k) { return 3LL * ceil_div(k, n); }, count_bw,
     [](const Secret& s) { return wrap(adaptive_black_white(s)); }},
    {"klogk", "black_peg", true, false,
     [](int, int k) { require_k_at_least(k, 2, "klogk"); },
     [](int, int k) { return static_cast<long long>(k) * ceil_log2(k); }, count_black,
     [](const Secret& s) { return wrap(fourier_ipk(s)); }},
    {"hunziker-meyer", "hamming_parity", false, false,
     [](int, int k) { require_k_at_least(k, 5, "hunziker-meyer"); },
     [](int, int k) { return hunziker_rounds(k); }, count_hamming,
     [](const Secret& s) {
       HunzikerMeyerResult h = hunziker_meyer(s);
       return RunOutcome{std::move(h.recovered), h.success_probability, std::move(h.ledger),
                         h.queries};
     }},
    {"padded-grover", "iterations", true, true,
     [](int n, int k) {
       require_k_at_least(k, 2, "padded-grover");
       if (n < 2) throw ContractViolation("padded-grover: n must be >= 2 to leave a padded tail");
     },
     [](int, int k) { return grover_params(k).iterations; }, count_iterations,
     [](const Secret& s) { return wrap(run_via_padded_oracle(s, s.n() + 1)); }},
};

const AlgorithmSpec& find_spec(const std::string& name) {
  for (const AlgorithmSpec& spec : kAlgorithms)
    if (name == spec.name) return spec;
  throw ContractViolation("unknown algorithm '" + name + "'");
}

/// Advances a base-k odometer; false once every digit wrapped to 0.
bool advance_code(std::vector<Color>& digits, int k) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < k) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

CodebreakerResult brute_force_codebreaker(const std::function<Feedback(const Query&)>& feedback_fn,
                                          int n, int k, bool black_only) {
  const GameInstance game(n, k);
  std::vector<Code> remaining;
  std::vector<Color> digits(static_cast<std::size_t>(n), 0);
  do {
    remaining.emplace_back(game, digits);
  } while (advance_code(digits, k));

  long long queries = 0;
  while (remaining.size() > 1) {
    const Query guess = remaining.front();
    const Feedback observed = feedback_fn(guess);
    ++queries;
    if (observed.black == n) return CodebreakerResult{guess, queries};
    std::erase_if(remaining, [&](const Code& candidate) {
      const Feedback predicted = black_white_peg(candidate, guess);
      if (predicted.black != observed.black) return true;
      return !black_only && predicted.white != observed.white;
    });
    if (remaining.empty())
      throw MalformedInput("brute_force_codebreaker: feedback is inconsistent with every secret");
  }
  return CodebreakerResult{remaining.front(), queries};
}

int permutation_white_peg(const Secret& s, const Query& x) {
  if (s.game() != x.game()) throw ContractViolation("permutation_white_peg: mismatched games");
  const int n = s.n();
  if (n > 6) throw ContractViolation("permutation_white_peg: factorial search capped at n = 6");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  int best = 0;
  do {
    int matches = 0;
    for (int i = 0; i < n; ++i)
      if (s[i] == x[sigma[static_cast<std::size_t>(i)]]) ++matches;
    best = std::max(best, matches);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best - black_peg(s, x);
}

VerifierReport exhaustive_verifier(const std::string& algorithm_name, int n, int k,
                                   const VerifierConfig& config) {
  const AlgorithmSpec& spec = find_spec(algorithm_name);
  const GameInstance game(n, k);
  spec.validate(n, k);

  VerifierReport report;
  report.algorithm = algorithm_name;
  report.n = n;
  report.k = k;
  report.bound = spec.bound(n, k);
  report.min_queries = std::numeric_limits<long long>::max();

  const int secret_length = spec.padded ? n - 1 : n;
  const GameInstance secret_game(secret_length, k);
  report.sampled =
      std::pow(static_cast<double>(k), secret_length) > static_cast<double>(config.full_sweep_budget);

  // Probability floor: 1 for exact algorithms; for hunziker-meyer the
  // e^{-n/k} guarantee, enforced only inside its regime e^{-n/k} > 1/2.
  double floor = 1.0;
  if (!spec.exact) {
    floor = std::exp(-static_cast<double>(n) / k);
    if (floor <= 0.5) floor = 0.0;
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> color(0, k - 1);
  std::vector<Color> digits(static_cast<std::size_t>(secret_length), 0);
  bool more = true;
  while (more) {
    if (report.sampled) {
      for (Color& d : digits) d = color(rng);
      more = ++report.runs < config.sample_count;
    } else {
      ++report.runs;
    }
    const Secret s(secret_game, digits);

    std::vector<Color> expected_digits = digits;
    if (spec.padded) expected_digits.push_back(1);
    const Secret expected(game, expected_digits);

    const RunOutcome out = spec.run(s);
    const long long queries = spec.metric(out);
    ++report.query_histogram[queries];
    report.min_queries = std::min(report.min_queries, queries);
    report.max_queries = std::max(report.max_queries, queries);
    report.min_success = std::min(report.min_success, out.success);

    const std::string label = "secret " + code_to_string(s);
    if (spec.exact && !(out.recovered == expected))
      report.failures.push_back(label + ": recovered " + code_to_string(out.recovered));
    if (floor > 0.0 && out.success < floor - config.success_tolerance)
      report.failures.push_back(label + ": success " + format_double(out.success) +
                               " below floor " + format_double(floor));
    if (queries > report.bound)
      report.failures.push_back(label + ": " + std::string(spec.unit) + " count " +
                               std::to_string(queries) + " exceeds bound " +
                               std::to_string(report.bound));
    if (algorithm_name == "adaptive-bw") {
      // The Grover stage runs over |C_s| <= min(n, k) colors, so its
      // iteration count never exceeds T(min(n, k)).
      const int k_cap = std::min(n, k);
      const long long stage_bound = k_cap >= 2 ? grover_params(k_cap).iterations : 0;
      if (out.iterations > stage_bound)
        report.failures.push_back(label + ": Grover iterations " +
                                 std::to_string(out.iterations) + " exceed stage bound " +
                                 std::to_string(stage_bound));
    }

    if (!report.sampled) more = advance_code(digits, k);
  }
  return report;
}

SingleRunResult run_algorithm_once(const std::string& algorithm_name, const Secret& s) {
  const AlgorithmSpec& spec = find_spec(algorithm_name);
  spec.validate(spec.padded ? s.n() + 1 : s.n(), s.k());
  RunOutcome out = spec.run(s);
  const long long queries = spec.metric(out);
  return SingleRunResult{std::move(out.recovered), out.success, std::move(out.ledger), queries,
                         out.iterations};
}

std::string query_unit(const std::string& algorithm_name) {
  return find_spec(algorithm_name).unit;
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const AlgorithmSpec& spec : kAlgorithms) out.emplace_back(spec.name);
    return out;
  }();
  return names;
}

long long query_bound(const std::string& algorithm_name, int n, int k) {
  const AlgorithmSpec& spec = find_spec(algorithm_name);
  spec.validate(n, k);
  return spec.bound(n, k);
}

bool algorithm_is_exact(const std::string& algorithm_name) {
  return find_spec(algorithm_name).exact;
}

}  // namespace mmq
