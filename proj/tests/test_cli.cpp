// CLI front end, exercised as a subprocess: output shapes, exit codes, and
// byte-level determinism. MMQ_CLI_PATH is injected by the build.

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

namespace {

struct CliResult {
  int status = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(MMQ_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("unit.cli") {

TEST_CASE("run emits the recovered secret as json") {
  const CliResult r = run_cli("run --alg nonadaptive-k1 --n 4 --k 6 --secret 0123 --format json");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "\"recovered\": \"0123\""));
  CHECK(contains(r.output, "\"queries\": 5"));
  CHECK(contains(r.output, "\"query_unit\": \"two_color\""));
}

TEST_CASE("run rejects bad input with distinct exit codes") {
  const CliResult out_of_range = run_cli("run --alg nonadaptive-k1 --n 3 --k 3 --secret 045");
  CHECK(out_of_range.status == 2);
  CHECK(contains(out_of_range.output, "digit"));

  const CliResult garbage = run_cli("run --alg nonadaptive-k1 --n 3 --k 3 --secret ab1");
  CHECK(garbage.status == 3);

  const CliResult wrong_k = run_cli("run --alg one-query-binary --n 3 --k 3 --secret 012");
  CHECK(wrong_k.status == 2);
  CHECK(contains(wrong_k.output, "k must be 2"));

  const CliResult unknown = run_cli("run --alg nope --n 2 --k 3");
  CHECK(unknown.status != 0);

  const CliResult capped = run_cli("run --alg adaptive-grover --n 12 --k 6 --max-dim 1000");
  CHECK(capped.status == 4);
}

TEST_CASE("verify passes on an exact sweep and reports sampling") {
  const CliResult pass = run_cli("verify --alg adaptive-grover --n 2 --k 5");
  CHECK(pass.status == 0);
  CHECK(contains(pass.output, "PASS"));
  CHECK(contains(pass.output, "runs=25"));

  const CliResult sampled =
      run_cli("verify --alg one-query-binary --n 11 --k 2 --format json");
  CHECK(sampled.status == 0);
  CHECK(contains(sampled.output, "\"sampled\": true"));
  CHECK(contains(sampled.output, "\"runs\": 256"));
}

TEST_CASE("table emits the grid and degenerates to a header") {
  const CliResult grid =
      run_cli("table --alg nonadaptive-k1 --n-min 2 --n-max 3 --k-min 3 --k-max 6 --format csv");
  CHECK(grid.status == 0);
  int lines = 0;
  for (char c : grid.output) lines += (c == '\n');
  CHECK(lines == 9);  // header + 2 n-values x 4 k-values
  CHECK(contains(grid.output, "algorithm,n,k,secret,queries,bound,success_prob,exact"));
  CHECK(contains(grid.output, "nonadaptive-k1,3,6,"));

  const CliResult empty = run_cli("table --n-min 3 --n-max 2 --format csv");
  CHECK(empty.status == 0);
  CHECK(empty.output == "algorithm,n,k,secret,queries,bound,success_prob,exact\n");
}

TEST_CASE("identical config and seed give byte-identical output") {
  const std::string args = "table --alg adaptive-bw --n-min 2 --n-max 2 --k-min 3 --k-max 5 "
                           "--seed 99 --format csv";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.output == second.output);
  CHECK_FALSE(first.output.empty());

  const std::string json_args = "run --alg klogk --n 2 --k 3 --secret 12 --format json";
  CHECK(run_cli(json_args).output == run_cli(json_args).output);
}

}  // TEST_SUITE
