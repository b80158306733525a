// Command-line front end: single runs, exhaustive verification, and query
// tables, in text, JSON, or CSV.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mmq/algorithms.hpp"
#include "mmq/baselines.hpp"
#include "mmq/errors.hpp"
#include "mmq/serialization.hpp"

namespace {

using nlohmann::json;

struct RunRow {
  std::string algorithm;
  int n = 0;
  int k = 0;
  std::string secret;
  std::string recovered;
  long long queries = 0;
  long long bound = 0;
  double success_prob = 0.0;
  bool exact = true;
  std::string unit;
  std::map<std::string, long long> ledger;
  long long shots = 0;
  double empirical_success_rate = -1.0;  // < 0 when not sampled
};

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string rows_to_csv(const std::vector<RunRow>& rows) {
  std::string out = "algorithm,n,k,secret,queries,bound,success_prob,exact\n";
  for (const RunRow& r : rows) {
    out += csv_field(r.algorithm) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
           csv_field(r.secret) + "," + std::to_string(r.queries) + "," + std::to_string(r.bound) +
           "," + mmq::format_double(r.success_prob) + "," + (r.exact ? "true" : "false") + "\n";
  }
  return out;
}

json row_to_json(const RunRow& r) {
  json j{{"algorithm", r.algorithm},
         {"n", r.n},
         {"k", r.k},
         {"secret", r.secret},
         {"recovered", r.recovered},
         {"queries", r.queries},
         {"query_unit", r.unit},
         {"bound", r.bound},
         {"success_prob", r.success_prob},
         {"exact", r.exact},
         {"ledger", r.ledger}};
  if (r.empirical_success_rate >= 0.0) {
    j["shots"] = r.shots;
    j["empirical_success_rate"] = r.empirical_success_rate;
  }
  return j;
}

std::string rows_to_text(const std::vector<RunRow>& rows) {
  std::string out;
  for (const RunRow& r : rows) {
    if (!out.empty()) out += "\n";
    out += "algorithm:    " + r.algorithm + "\n";
    out += "n, k:         " + std::to_string(r.n) + ", " + std::to_string(r.k) + "\n";
    out += "secret:       " + r.secret + "\n";
    out += "recovered:    " + r.recovered + "\n";
    out += "queries:      " + std::to_string(r.queries) + " (" + r.unit + ")\n";
    out += "bound:        " + std::to_string(r.bound) + "\n";
    out += "success_prob: " + mmq::format_double(r.success_prob) + "\n";
    out += "exact:        " + std::string(r.exact ? "true" : "false") + "\n";
    if (r.empirical_success_rate >= 0.0)
      out += "empirical:    " + mmq::format_double(r.empirical_success_rate) + " over " +
             std::to_string(r.shots) + " shots\n";
    std::string ledger = "ledger:      ";
    for (const auto& [key, value] : r.ledger) ledger += " " + key + "=" + std::to_string(value);
    out += ledger + "\n";
  }
  return out;
}

struct VerifyRow {
  mmq::VerifierReport report;
  std::string unit;
};

std::string verify_rows_to_csv(const std::vector<VerifyRow>& rows) {
  std::string out =
      "algorithm,n,k,runs,sampled,min_success,min_queries,max_queries,bound,failures,passed\n";
  for (const VerifyRow& row : rows) {
    const mmq::VerifierReport& r = row.report;
    out += csv_field(r.algorithm) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
           std::to_string(r.runs) + "," + (r.sampled ? "true" : "false") + "," +
           mmq::format_double(r.min_success) + "," + std::to_string(r.min_queries) + "," +
           std::to_string(r.max_queries) + "," + std::to_string(r.bound) + "," +
           std::to_string(r.failures.size()) + "," + (r.passed() ? "true" : "false") + "\n";
  }
  return out;
}

json verify_row_to_json(const VerifyRow& row) {
  const mmq::VerifierReport& r = row.report;
  json histogram = json::object();
  for (const auto& [queries, count] : r.query_histogram)
    histogram[std::to_string(queries)] = count;
  return json{{"algorithm", r.algorithm},
              {"n", r.n},
              {"k", r.k},
              {"runs", r.runs},
              {"sampled", r.sampled},
              {"min_success", r.min_success},
              {"query_counts", json{{"min", r.min_queries}, {"max", r.max_queries},
                                    {"histogram", histogram}}},
              {"bound", r.bound},
              {"query_unit", row.unit},
              {"failures", r.failures},
              {"passed", r.passed()}};
}

std::string verify_rows_to_text(const std::vector<VerifyRow>& rows) {
  std::string out;
  for (const VerifyRow& row : rows) {
    const mmq::VerifierReport& r = row.report;
    out += r.algorithm + " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
           " runs=" + std::to_string(r.runs) + (r.sampled ? " (sampled)" : " (full sweep)") +
           " min_success=" + mmq::format_double(r.min_success) + " queries=[" +
           std::to_string(r.min_queries) + "," + std::to_string(r.max_queries) + "] bound=" +
           std::to_string(r.bound) + " " + row.unit + ": " +
           (r.passed() ? "PASS" : "FAIL") + "\n";
    for (const std::string& failure : r.failures) out += "  " + failure + "\n";
  }
  return out;
}

mmq::Secret random_secret(const mmq::GameInstance& game, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> color(0, game.k - 1);
  std::vector<mmq::Color> digits(static_cast<std::size_t>(game.n));
  for (mmq::Color& d : digits) d = color(rng);
  return mmq::Secret(game, digits);
}

/// Secret length the named algorithm expects for an (n, k) problem: the
/// padded driver takes the inner string of length n-1.
int secret_length(const std::string& algorithm, int n) {
  return algorithm == "padded-grover" ? n - 1 : n;
}

RunRow run_once(const std::string& algorithm, const mmq::Secret& secret, int n, long long shots,
                std::uint64_t seed) {
  RunRow row;
  row.algorithm = algorithm;
  row.n = n;
  row.k = secret.k();
  row.secret = mmq::code_to_string(secret);
  row.unit = mmq::query_unit(algorithm);
  row.bound = mmq::query_bound(algorithm, n, secret.k());
  row.exact = mmq::algorithm_is_exact(algorithm);
  if (algorithm == "hunziker-meyer" && shots > 0) {
    const mmq::HunzikerMeyerResult r = mmq::hunziker_meyer(secret, shots, seed);
    row.recovered = mmq::code_to_string(r.recovered);
    row.queries = r.queries;
    row.success_prob = r.success_probability;
    row.ledger = r.ledger.to_map();
    row.shots = r.shots;
    row.empirical_success_rate = r.empirical_success_rate;
  } else {
    const mmq::SingleRunResult r = mmq::run_algorithm_once(algorithm, secret);
    row.recovered = mmq::code_to_string(r.recovered);
    row.queries = r.queries;
    row.success_prob = r.success_probability;
    row.ledger = r.ledger.to_map();
  }
  return row;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw mmq::MalformedInput("cannot open output file '" + out_path + "'");
  out << text;
}

std::vector<std::string> expand_algorithms(const std::string& requested) {
  if (requested != "all") return {requested};
  return mmq::algorithm_names();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Mastermind laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 20260822;
  std::size_t max_dim = mmq::RegisterLayout::default_amplitude_cap();
  app.add_option("--format", format, "Output format")
      ->transform(CLI::IsMember({"text", "json", "csv"}))
      ->envname("MMQ_FORMAT");
  app.add_option("--out", out_path, "Write output to this file")->envname("MMQ_OUT");
  app.add_option("--seed", seed, "Seed for sampling and random secrets")->envname("MMQ_SEED");
  app.add_option("--max-dim", max_dim, "Amplitude cap for state vectors")->envname("MMQ_MAX_DIM");

  std::vector<std::string> known = mmq::algorithm_names();
  std::vector<std::string> known_or_all = known;
  known_or_all.emplace_back("all");

  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on one secret");
  run_cmd->fallthrough();
  std::string run_alg;
  int run_n = 0;
  int run_k = 0;
  std::string run_secret;
  long long run_shots = 0;
  run_cmd->add_option("--alg", run_alg, "Algorithm name")
      ->required()
      ->transform(CLI::IsMember(known))
      ->envname("MMQ_ALG");
  run_cmd->add_option("--n", run_n, "Positions")->required()->envname("MMQ_N");
  run_cmd->add_option("--k", run_k, "Colors")->required()->envname("MMQ_K");
  run_cmd->add_option("--secret", run_secret, "Secret digits (random when omitted)")
      ->envname("MMQ_SECRET");
  run_cmd->add_option("--shots", run_shots, "Sampled measurements (hunziker-meyer only)")
      ->envname("MMQ_SHOTS");

  auto* verify_cmd = app.add_subcommand("verify", "Sweep every secret and check the claims");
  verify_cmd->fallthrough();
  std::string verify_alg;
  int verify_n = 0;
  int verify_k = 0;
  mmq::VerifierConfig verify_config;
  verify_cmd->add_option("--alg", verify_alg, "Algorithm name or 'all'")
      ->required()
      ->transform(CLI::IsMember(known_or_all))
      ->envname("MMQ_ALG");
  verify_cmd->add_option("--n", verify_n, "Positions")->required()->envname("MMQ_N");
  verify_cmd->add_option("--k", verify_k, "Colors")->required()->envname("MMQ_K");
  verify_cmd->add_option("--tolerance", verify_config.success_tolerance,
                         "Success-probability tolerance")
      ->envname("MMQ_TOLERANCE");
  verify_cmd->add_option("--samples", verify_config.sample_count,
                         "Sample count once k^n exceeds the sweep budget");
  verify_cmd->add_option("--sweep-budget", verify_config.full_sweep_budget,
                         "Largest k^n still swept in full");

  auto* table_cmd = app.add_subcommand("table", "Query counts across an (n, k) grid");
  table_cmd->fallthrough();
  std::string table_alg = "all";
  int table_n_min = 2;
  int table_n_max = 3;
  int table_k_min = 3;
  int table_k_max = 6;
  table_cmd->add_option("--alg", table_alg, "Algorithm name or 'all'")
      ->transform(CLI::IsMember(known_or_all))
      ->envname("MMQ_ALG");
  table_cmd->add_option("--n-min", table_n_min, "First n row");
  table_cmd->add_option("--n-max", table_n_max, "Last n row");
  table_cmd->add_option("--k-min", table_k_min, "First k column");
  table_cmd->add_option("--k-max", table_k_max, "Last k column");

  try {
    app.parse(argc, argv);
    mmq::RegisterLayout::set_default_amplitude_cap(max_dim);

    if (*run_cmd) {
      const mmq::GameInstance secret_game(secret_length(run_alg, run_n), run_k);
      std::mt19937_64 rng(seed);
      const mmq::Secret secret = run_secret.empty()
                                     ? random_secret(secret_game, rng)
                                     : mmq::code_from_string(secret_game, run_secret);
      if (run_shots > 0 && run_alg != "hunziker-meyer")
        throw mmq::ContractViolation("--shots only applies to hunziker-meyer");
      const RunRow row = run_once(run_alg, secret, run_n, run_shots, seed);
      std::vector<RunRow> rows{row};
      if (format == "csv") emit(rows_to_csv(rows), out_path);
      else if (format == "json") emit(row_to_json(row).dump(2) + "\n", out_path);
      else emit(rows_to_text(rows), out_path);
      // The padded driver solves the (n, k) problem whose secret is the
      // inner string extended with 1s; everywhere else expected == secret.
      std::vector<mmq::Color> expected_digits = secret.digits();
      expected_digits.resize(static_cast<std::size_t>(run_n), 1);
      const mmq::Secret expected(mmq::GameInstance(run_n, run_k), expected_digits);
      const bool ok = !row.exact || row.recovered == mmq::code_to_string(expected);
      return ok ? 0 : 1;
    }

    if (*verify_cmd) {
      verify_config.seed = seed;
      std::vector<VerifyRow> rows;
      for (const std::string& algorithm : expand_algorithms(verify_alg)) {
        try {
          VerifyRow row;
          row.report = mmq::exhaustive_verifier(algorithm, verify_n, verify_k, verify_config);
          row.unit = mmq::query_unit(algorithm);
          rows.push_back(std::move(row));
        } catch (const mmq::ContractViolation& e) {
          if (verify_alg != "all") throw;
          std::cerr << "skipped " << algorithm << ": " << e.what() << "\n";
        }
      }
      if (format == "csv") {
        emit(verify_rows_to_csv(rows), out_path);
      } else if (format == "json") {
        json all = json::array();
        for (const VerifyRow& row : rows) all.push_back(verify_row_to_json(row));
        emit(all.dump(2) + "\n", out_path);
      } else {
        emit(verify_rows_to_text(rows), out_path);
      }
      for (const VerifyRow& row : rows)
        if (!row.report.passed()) return 1;
      return 0;
    }

    // table
    std::vector<RunRow> rows;
    std::mt19937_64 rng(seed);
    for (const std::string& algorithm : expand_algorithms(table_alg)) {
      for (int n = table_n_min; n <= table_n_max; ++n) {
        for (int k = table_k_min; k <= table_k_max; ++k) {
          try {
            (void)mmq::query_bound(algorithm, n, k);
          } catch (const mmq::ContractViolation&) {
            continue;  // outside this algorithm's (n, k) domain
          }
          const mmq::GameInstance secret_game(secret_length(algorithm, n), k);
          rows.push_back(run_once(algorithm, random_secret(secret_game, rng), n, 0, seed));
        }
      }
    }
    if (format == "csv") {
      emit(rows_to_csv(rows), out_path);
    } else if (format == "json") {
      json all = json::array();
      for (const RunRow& row : rows) all.push_back(row_to_json(row));
      emit(all.dump(2) + "\n", out_path);
    } else {
      emit(rows_to_text(rows), out_path);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const mmq::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 2;
  } catch (const mmq::MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 3;
  } catch (const mmq::DimensionCapExceeded& e) {
    std::cerr << "dimension cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}
