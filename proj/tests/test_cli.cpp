// Drives the installed executable the way a user would.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(FRACFLUX_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "fracflux_test_cli" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
  const auto dir = scratch("codes");
  CHECK(run_cli("scenarios") == 0);
  CHECK(run_cli("") != 0);
  CHECK(run_cli("run --scenario ice-warsaw --bogus") != 0);
  CHECK(run_cli("run --scenario atlantis --out-dir " + dir.string()) == 2);
  CHECK(run_cli("run --scenario fig7-zero --flux darcy --out-dir " +
                dir.string()) == 2);
  CHECK(run_cli("run --out-dir " + dir.string()) == 2);
  CHECK(run_cli("run --scenario fig7-zero --snapshots 0.1,zz --out-dir " +
                dir.string()) == 2);
  // Explicit Fourier at dt/dx^2 = 5 diverges.
  CHECK(run_cli("run --scenario pulse-reflective --flux fourier --out-dir " +
                dir.string()) == 3);
  CHECK(run_cli("run --scenario fig7-zero --left-value 1 --out-dir " +
                dir.string()) == 2);
  CHECK(run_cli("run --scenario fig7-zero --left-value 1 "
                "--force-inconsistent-bc --t-end 0.01 --out-dir " +
                dir.string()) == 0);
}

TEST_CASE("run then replay from the manifest gives identical CSV") {
  const auto dir = scratch("replay");
  REQUIRE(run_cli("run --scenario fig7-shifted --flux rl --alpha 0.4 "
                  "--snapshots 0,0.02,0.1 --t-end 0.1 --out-dir " +
                  (dir / "a").string()) == 0);
  REQUIRE(run_cli("run --config " + (dir / "a" / "manifest.json").string() +
                  " --out-dir " + (dir / "b").string()) == 0);
  const auto a = slurp(dir / "a" / "snapshots.csv");
  CHECK_FALSE(a.empty());
  CHECK(a == slurp(dir / "b" / "snapshots.csv"));
  CHECK(slurp(dir / "a" / "summary.json") == slurp(dir / "b" / "summary.json"));
}

TEST_CASE("compare writes csv and verdict") {
  const auto dir = scratch("compare");
  REQUIRE(run_cli("compare --scenario fig7-zero --flux-a rl --flux-b caputo "
                  "--out-dir " + dir.string()) == 0);
  CHECK(fs::exists(dir / "compare.csv"));
  CHECK(fs::exists(dir / "compare.json"));
}
