#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"

extern std::vector<std::string> g_test_args;

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  REQUIRE_MESSAGE(!g_test_args.empty(), "pass the cmlab binary path as an argument");
  const std::string command = "\"" + g_test_args.front() + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_config(const std::string& name, const std::string& text) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("cli exit codes") {
  const fs::path out = fs::temp_directory_path() / "cmlab_test_cli";
  fs::remove_all(out);

  const auto good = write_config("cmlab_cli_good.json",
                                 R"({"experiments": ["moments"], "moments": {"replicas": 5000}})");
  CHECK(run_cli("moments --config " + good.string() + " --out " + out.string()) == 0);
  CHECK(fs::exists(out / "moments.csv"));
  CHECK(fs::exists(out / "summary.json"));

  CHECK(run_cli("sample --n 4 --seed 3 --out " + out.string()) == 0);
  CHECK(fs::exists(out / "minor.txt"));

  const auto bad = write_config("cmlab_cli_bad.json", R"({"experiments": []})");
  CHECK(run_cli("all --config " + bad.string() + " --out " + out.string()) == 1);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("norm --verbosity 9") == 1);

  const auto failing = write_config(
      "cmlab_cli_fail.json",
      R"({"points": [2, -1], "experiments": ["norm"], "n_grid": [32], "norm": {"slack": -10}})");
  CHECK(run_cli("norm --config " + failing.string() + " --out " + out.string()) == 3);

  CHECK(run_cli("--help") == 0);
  fs::remove_all(out);
  for (const auto& p : {good, bad, failing}) fs::remove(p);
}
