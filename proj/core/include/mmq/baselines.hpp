#pragma once

// Classical reference implementations and brute-force oracles. These mint the
// expected values the quantum drivers are tested against.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mmq/game.hpp"
#include "mmq/ledger.hpp"

namespace mmq {

/// The secrets still consistent with all feedback seen so far. The true
/// secret is always a member; the set shrinks monotonically.
struct CandidateSet {
  std::vector<Code> remaining;
};

struct CodebreakerResult {
  Secret recovered;
  long long queries = 0;
};

/// Classical consistency elimination: queries the lexicographically first
/// remaining candidate, discards candidates whose feedback would differ, and
/// returns the unique survivor. feedback_fn answers BW_s for one fixed s;
/// with black_only set the white count is ignored, so feedback_fn may
/// answer B_s alone.
CodebreakerResult brute_force_codebreaker(const std::function<Feedback(const Query&)>& feedback_fn,
                                          int n, int k, bool black_only = false);

/// The literal definition of the white-peg count: max over permutations sigma
/// of |{i : s_i = x_sigma(i)}| minus the black-peg count. Factorial cost;
/// rejected for n > 6. Test oracle for white_peg.
int permutation_white_peg(const Secret& s, const Query& x);

struct VerifierConfig {
  long long full_sweep_budget = 1296;  // run all k^n secrets when k^n <= budget
  int sample_count = 256;              // otherwise this many seeded samples
  std::uint64_t seed = 20260822;
  double success_tolerance = 1e-9;
};

struct VerifierReport {
  std::string algorithm;
  int n = 0;
  int k = 0;
  long long runs = 0;
  bool sampled = false;  // true when the sweep budget forced sampling
  double min_success = 1.0;
  long long min_queries = 0;
  long long max_queries = 0;
  long long bound = 0;
  std::map<long long, long long> query_histogram;
  std::vector<std::string> failures;  // serialized failing secrets with reasons

  bool passed() const { return failures.empty(); }
};

/// Runs the named driver for every secret in [k]^n (or a seeded sample when
/// k^n exceeds the budget) and reports minimum success probability, query
/// counts, and failures. For exact algorithms a failure is any run with
/// recovered != s, success below 1 - tolerance, or a query count above the
/// bound; hunziker-meyer is gated on its probability bound and query count
/// only, never on exactness.
VerifierReport exhaustive_verifier(const std::string& algorithm_name, int n, int k,
                                   const VerifierConfig& config = {});

struct SingleRunResult {
  Secret recovered;
  double success_probability = 0.0;
  QueryLedger ledger;
  long long queries = 0;     // in the algorithm's query unit
  long long iterations = 0;  // Grover iterations, where applicable
};

/// Runs the named driver once. For padded-grover the secret is the inner
/// string and the solved problem has length n+1; hunziker-meyer runs
/// without sampling.
SingleRunResult run_algorithm_once(const std::string& algorithm_name, const Secret& s);

/// The unit an algorithm's queries and bound are stated in: "two_color",
/// "black_peg", "black_white_peg", "hamming_parity", or "iterations" for
/// the Grover drivers, whose convention counts iterations T while the
/// ledger reports the 2T (4T padded) raw invocations alongside.
std::string query_unit(const std::string& algorithm_name);

/// The algorithm names exhaustive_verifier and the CLI accept.
const std::vector<std::string>& algorithm_names();

/// Per-algorithm query bound for a given (n, k), in query_unit units: k-1
/// and 2 ceil(k/3) two-color circuits for the non-adaptive drivers, T
/// iterations for the exact Grover drivers (direct and padded), 3 ceil(k/n)
/// black-white-peg queries for the subset-parity driver, k ceil(log2 k)
/// black-peg queries for the IPK driver, and the rounded
/// (pi / (2 arcsin(1/sqrt k)) - 1) / 2 Grover rounds for hunziker-meyer.
long long query_bound(const std::string& algorithm_name, int n, int k);

/// False only for hunziker-meyer, which is known not to be exact.
bool algorithm_is_exact(const std::string& algorithm_name);

}  // namespace mmq
