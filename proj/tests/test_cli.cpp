// End-to-end checks of the command-line tool: exit codes, report content,
// and byte-for-byte determinism of seeded runs.

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  std::string tmp = "cli_out.tmp";
  std::string cmd = std::string(YGZ_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.output = slurp(tmp);
  std::remove(tmp.c_str());
  return r;
}

std::string spec_path(const std::string& name) {
  return std::string(YGZ_SOURCE_DIR) + "/specs/" + name;
}

}  // namespace

TEST_CASE("scheme listing") {
  RunResult r = run("schemes --lambda 2,1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("count 8") != std::string::npos);
  RunResult empty = run("schemes --lambda 1,0 --mu 5");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("count 0") != std::string::npos);
  CHECK(empty.output.find("empty") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run("schemes --lambda 0,1").exit_code == 2);
  CHECK(run("schemes --lambda x").exit_code == 2);
  CHECK(run("build --spec /nonexistent.json").exit_code == 2);
  CHECK(run("classify --zeros m=1:0").exit_code == 2);  // missing --N
  CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("build refuses colliding nodal points") {
  RunResult r = run("build --spec " + spec_path("x_c2x2_equal.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("build dumps the families") {
  RunResult r = run("build --spec " + spec_path("s1_c2_basic.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("degree") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verification suites pass on a bundled module") {
  RunResult r = run("verify --spec " + spec_path("s1_c2_basic.json") +
                    " --suite all --samples 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("classification verdicts") {
  RunResult tame = run("classify --zeros m=1:0,5 --N 2");
  CHECK(tame.exit_code == 0);
  CHECK(tame.output.find("verdict: tame") != std::string::npos);
  RunResult untame = run("classify --zeros m=1:0,0 --N 2");
  CHECK(untame.exit_code == 0);
  CHECK(untame.output.find("verdict: not tame") != std::string::npos);
  CHECK(untame.output.find("witness:") != std::string::npos);
}

TEST_CASE("seeded reports are byte-identical") {
  std::string args = "verify --spec " + spec_path("s2_c2_tensor_half.json") +
                     " --suite rtt --samples 3 --seed 9 --out ";
  RunResult a = run(args + "det_a.tmp");
  RunResult b = run(args + "det_b.tmp");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  std::string fa = slurp("det_a.tmp"), fb = slurp("det_b.tmp");
  CHECK(!fa.empty());
  CHECK(fa == fb);
  CHECK(a.output == b.output);
  std::remove("det_a.tmp");
  std::remove("det_b.tmp");
}
