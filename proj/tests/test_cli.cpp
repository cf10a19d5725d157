// Spawns the command-line binary (path injected as GEX_BIN) and checks the
// exit-code contract: 0 verified, 1 refuted, 2 budget, 3 usage.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string capture_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

RunResult run(const std::string& args) {
  const std::string path = capture_path("gex_cli_capture.txt");
  const std::string cmd = std::string(GEX_BIN) + " " + args + " > " + path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("even commutator over the canonical grading is verified") {
  const RunResult r = run("check --grading can --poly \"[x1@2, x2@5]\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verdict: graded identity"));
}

TEST_CASE("chain witness prints the scripted value") {
  const RunResult r = run("witness --grading k_star --k 2 --poly \"t_2n(2; 0,0,0,0)\"");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "verdict: not a graded identity"));
  CHECK(contains(r.out, "value: 4*e3e4e5e6"));
}

TEST_CASE("theorem verification prints a dimension table") {
  const RunResult r = run("verify Ek-main --k 1 --n-max 4");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "RESULT: verified"));
  CHECK(contains(r.out, ", identities "));
  CHECK(contains(r.out, "[generated]"));
}

TEST_CASE("usage errors exit with 3") {
  CHECK(run("check --grading nope --poly \"x1@1\"").code == 3);
  CHECK(run("check --grading can").code == 3);  // no polynomial given
  CHECK(run("check --grading can --poly \"x1@@\"").code == 3);
  CHECK(run("verify No-such-theorem").code == 3);
  CHECK(run("--bogus-flag").code == 3);
  CHECK(run("eval --grading can --poly \"x1@1\" --assign \"x1@1=e2\" --rank 1").code == 3);
}

TEST_CASE("incomplete enumeration exits with 2") {
  const RunResult r = run("check --blocks \"(-1,inf);(1,inf)\" --poly \"[x1@0, x2@0]\"");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "incomplete enumeration"));
  CHECK(contains(r.out, "verdict: inconclusive within budget"));
}

TEST_CASE("eval substitutes and prints the value") {
  const RunResult r =
      run("eval --grading can --rank 6 --poly \"[x1@1, x2@1]\" --assign \"x1@1=e1; x2@1=e2\"");
  CHECK(r.code == 0);
  CHECK(r.out == "2*e1e2\n");
  const RunResult z =
      run("eval --grading can --rank 6 --poly \"[x1@1, x2@1]\" --assign \"x1@1=e1; x2@1=0\"");
  CHECK(z.code == 0);
  CHECK(z.out == "0\n");
}

TEST_CASE("config files feed flags and flags win") {
  const std::string cfg = capture_path("gex_cli_config.txt");
  {
    std::ofstream out(cfg);
    out << "grading = can\n"
        << "rank = 6\n"
        << "poly = [x1@1, x2@1]  # defaults for the run\n"
        << "assign = x1@1=e1; x2@1=e2\n";
  }
  const RunResult base = run("eval --config " + cfg);
  CHECK(base.code == 0);
  CHECK(base.out == "2*e1e2\n");
  const RunResult over = run("eval --config " + cfg + " --poly \"x1@1*x2@1\"");
  CHECK(over.code == 0);
  CHECK(over.out == "e1e2\n");
}

TEST_CASE("span reports one signature") {
  const RunResult r = run("span --grading can --vars \"1,1\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "RESULT: verified"));
}

TEST_CASE("gradings lists the presets") {
  const RunResult r = run("gradings");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "can"));
  CHECK(contains(r.out, "index"));
  CHECK(contains(r.out, "pq_k_infinity"));
}

TEST_CASE("--out redirects the report") {
  const std::string out_file = capture_path("gex_cli_report.txt");
  std::filesystem::remove(out_file);
  const RunResult r =
      run("check --grading can --poly \"[x1@2, x2@5]\" --out " + out_file);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(contains(ss.str(), "verdict: graded identity"));
}

}  // TEST_SUITE
