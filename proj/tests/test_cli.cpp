#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI with the given arguments, capturing stdout; stderr is
// discarded so usage errors keep the captured stream clean.
RunResult run_cli(const std::string& args) {
  const std::string command = std::string(JACKPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

TEST_CASE("evaluation subcommands print bare exact values") {
  const RunResult schur = run_cli("jack eval --mu 2 --theta 1 --n 2 --point 1,1");
  CHECK(schur.exit_code == 0);
  CHECK(schur.out == "3\n");

  const RunResult binom = run_cli("binom coeff --lambda 5 --mu 2 --theta 1/2");
  CHECK(binom.exit_code == 0);
  CHECK(binom.out == "10\n");

  const RunResult vanishing = run_cli("shifted eval --mu 2,1 --lambda 1 --theta 2");
  CHECK(vanishing.exit_code == 0);
  CHECK(vanishing.out == "0\n");

  const RunResult dim = run_cli("thetadim --lambda 2,1 --theta 1");
  CHECK(dim.exit_code == 0);
  CHECK(dim.out == "2\n");
}

TEST_CASE("expansion output lists monomial coefficients in graded order") {
  const RunResult text = run_cli("jack expand --mu 2 --theta 1 --n 2");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "m[2] 1\nm[1,1] 1\n");

  const RunResult json = run_cli("jack expand --mu 2 --theta 1 --n 2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out ==
        "{\"n\":2,\"basis\":\"monomial\",\"terms\":[{\"partition\":[2],\"coeff\":\"1\"},"
        "{\"partition\":[1,1],\"coeff\":\"1\"}]}\n");
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("jack eval --theta 1 --n 2 --point 1,1").exit_code == 2);  // --mu missing
  CHECK(run_cli("shifted eval --mu 2 --lambda abc --theta 1").exit_code == 2);
  CHECK(run_cli("jack eval --mu 2 --theta 0 --n 2 --point 1,1").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("verification subcommands map verdicts onto exit codes") {
  const RunResult equal = run_cli("binom verify --lambda 2,1 --n 3 --theta 1/2");
  CHECK(equal.exit_code == 0);
  CHECK(equal.out == "equal true\nmax_abs_diff 0\n");

  const RunResult equal_json = run_cli("binom verify --lambda 2,1 --n 3 --theta 1/2 --format json");
  CHECK(equal_json.exit_code == 0);
  CHECK(equal_json.out.find("\"equal\":true") != std::string::npos);
  CHECK(equal_json.out.find("\"max_abs_diff\":\"0\"") != std::string::npos);

  // The plain rule at fractional theta genuinely cannot reach 1e-12 with four
  // nodes, so the identity check reports failure.
  const RunResult coarse =
      run_cli("integral verify --mu 1 --lambda 2,1 --theta 1/2 --nodes 4 --rule legendre --tol 1e-12");
  CHECK(coarse.exit_code == 1);

  const RunResult absorbed =
      run_cli("integral verify --mu 1 --lambda 2,1 --theta 1/2 --nodes 6 --rule jacobi --tol 1e-9");
  CHECK(absorbed.exit_code == 0);
}

TEST_CASE("bessel subcommand reports value and diagnostics") {
  const RunResult text = run_cli("bessel --l 1 --x 0.5 --theta 1 --degree-cut 20");
  CHECK(text.exit_code == 0);
  // One variable collapses to exp(l x), printed to 15 significant digits.
  CHECK(text.out.find("value 1.64872127070013\n") == 0);
  CHECK(text.out.find("tail_estimate ") != std::string::npos);
  CHECK(text.out.find("symmetry_gap 0\n") != std::string::npos);

  const RunResult json = run_cli("bessel --l 1 --x 0.5 --theta 1 --degree-cut 20 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"degree_cut\":20") != std::string::npos);
  CHECK(json.out.find("\"symmetry_gap\":0.0") != std::string::npos);
}

TEST_CASE("repeated runs produce byte-identical output") {
  const std::string args = "jack expand --mu 3,1 --theta 2/3 --n 3 --format json";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  const std::string suite = "verify suite --max-size 2";
  CHECK(run_cli(suite).out == run_cli(suite).out);
}

TEST_CASE("output flag writes the same payload to a file") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "jackpoly_cli_output_test.txt";
  std::filesystem::remove(path);
  const RunResult to_file =
      run_cli("binom coeff --lambda 5 --mu 2 --theta 1/2 --output " + path.string());
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "10\n");
  std::filesystem::remove(path);
}

TEST_CASE("verify suite passes at desk scale and prints one line per battery") {
  const RunResult suite = run_cli("verify suite --max-size 3");
  CHECK(suite.exit_code == 0);
  CHECK(suite.out.find("FAIL") == std::string::npos);
  CHECK(suite.out.find("PASS sekiguchi_eigenvalue") != std::string::npos);
  CHECK(suite.out.find("PASS interpolation_vanishing") != std::string::npos);
  CHECK(suite.out.find("PASS bessel_series") != std::string::npos);
}
