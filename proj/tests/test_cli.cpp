// End-to-end checks of the command-line binary: every documented invocation
// is executed and byte-compared against its golden file, plus exit-code and
// determinism checks.  Paths come from compile definitions so the tests work
// from any build directory.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef REVSYNTH_CLI_PATH
#error "REVSYNTH_CLI_PATH must point at the revsynth binary"
#endif
#ifndef REVSYNTH_GOLDEN_DIR
#error "REVSYNTH_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Runs the binary through the shell with stdout/stderr captured separately.
// `env` is prepended verbatim, e.g. "REVSYNTH_THREADS=8 ".
RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  auto dir = std::filesystem::temp_directory_path();
  auto tag = std::to_string(++counter);
  auto out_path = dir / ("revsynth_out_" + tag);
  auto err_path = dir / ("revsynth_err_" + tag);
  std::string cmd = env + std::string(REVSYNTH_CLI_PATH) + " " + args + " >" +
                    out_path.string() + " 2>" + err_path.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

struct GoldenCase {
  const char* args;
  const char* golden;
};

// Every invocation documented in the README, in the same order.
const GoldenCase kGoldenCases[] = {
    {"gate --show \"G[1,2,3]\" --n 3", "gate_g123.txt"},
    {"gate --show \"T[1,2,3]\" --n 3 --format json", "gate_t123.json"},
    {"order --lib G --n 3", "order_g3.txt"},
    {"order --gates \"F[1,2,3],F[2,1,3],F[3,2,1]\" --n 3 --format csv",
     "order_f_custom.csv"},
    {"census --lib NCT --n 3 --format csv", "census_nct.csv"},
    {"census --lib NT --lib NP --n 3", "census_nt_np.txt"},
    {"sublibs --lib NT --n 3", "sublibs_nt.txt"},
    {"sublibs --lib NP --n 3 --format json", "sublibs_np.json"},
    {"minimal --lib G --n 3", "minimal_g.txt"},
    {"synth --spec \"(7,8)\" --lib NCT --n 3", "synth_toffoli.txt"},
    {"synth --spec \"5,6,7,8,3,4,2,1\" --lib NCT --n 3 --format json",
     "synth_chain.json"},
    {"randpairs --n 6 --trials 5 --seed 7 --format csv", "randpairs_n6.csv"},
    {"randpairs --n 3 --trials 4 --seed 1", "randpairs_n3.txt"},
};

}  // namespace

TEST_CASE("documented commands reproduce their golden output") {
  for (const auto& c : kGoldenCases) {
    INFO(c.args);
    auto expected =
        slurp(std::filesystem::path(REVSYNTH_GOLDEN_DIR) / c.golden);
    auto r = run_cli(c.args);
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == expected);
  }
}

TEST_CASE("usage problems exit with code 1") {
  for (const char* args : {
           "order --lib XYZ --n 3",              // unknown library
           "order --n 3",                        // neither --lib nor --gates
           "order --lib G --gates \"N[1]\" --n 3",  // both given
           "gate --show \"Q[1]\" --n 3",         // unknown gate kind
           "gate --show \"T[1,2,3]\" --n 2",     // gate too wide
           "census --lib NCT --n 3 --format xml",
           "synth --spec \"(7,8\" --lib NCT --n 3",   // unclosed cycle
           "synth --spec \"1,2,3\" --lib NCT --n 3",  // wrong image count
           "randpairs --n 11",
           "sublibs --lib NCT --n 4",            // census is width-3 only
           "census --lib NCT",                   // missing required --n
           "nonsense --n 3",
       }) {
    INFO(args);
    auto r = run_cli(args);
    CHECK(r.exit_code == 1);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("domain failures exit with code 2") {
  // An odd permutation is outside the group generated by NCT at width 4.
  auto miss = run_cli("synth --spec \"(1,2)\" --lib NCT --n 4");
  CHECK(miss.exit_code == 2);
  CHECK(miss.err.find("NotInGeneratedGroup") != std::string::npos);

  auto deep = run_cli(
      "synth --spec \"(1,8)(2,7)(3,6)(4,5)\" --lib NT --n 3 --max-depth 1");
  CHECK(deep.exit_code == 2);
  CHECK(deep.err.find("DepthExceeded") != std::string::npos);
}

TEST_CASE("help is available and succeeds") {
  auto top = run_cli("--help");
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("census") != std::string::npos);
  auto sub = run_cli("synth --help");
  CHECK(sub.exit_code == 0);
  CHECK(sub.out.find("--max-depth") != std::string::npos);
}

TEST_CASE("--out writes exactly what stdout would carry") {
  auto dir = std::filesystem::temp_directory_path();
  auto path = dir / "revsynth_out_file";
  auto direct = run_cli("census --lib NT --n 3 --format json");
  auto filed =
      run_cli("census --lib NT --n 3 --format json --out " + path.string());
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("repeated runs and thread counts give identical bytes") {
  const std::string census = "census --lib NCT --lib NP --n 3 --format csv";
  CHECK(run_cli(census).out == run_cli(census).out);

  const std::string sublibs = "sublibs --lib NCT --n 3 --format json";
  auto one = run_cli(sublibs, "REVSYNTH_THREADS=1 ");
  auto eight = run_cli(sublibs, "REVSYNTH_THREADS=8 ");
  CHECK(one.exit_code == 0);
  CHECK(one.out == eight.out);

  const std::string pairs = "randpairs --n 4 --trials 6 --seed 3";
  CHECK(run_cli(pairs).out == run_cli(pairs).out);
}
