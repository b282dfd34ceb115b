// cmlab: seeded experiments on ergodic central measures.
//
//   cmlab converge --config run.json --seed 7 --out results/
//   cmlab all --config run.json --threads 0
//
// Exit status: 0 all checks pass, 1 configuration error, 2 numerical
// failure, 3 an acceptance check failed.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cmlab/error.hpp"
#include "cmlab/log.hpp"
#include "cmlab/runner.hpp"

namespace {

int run_command(const std::string& command, const std::optional<std::string>& config_path,
                const std::optional<std::uint64_t>& seed, const std::optional<std::string>& out,
                const std::optional<unsigned>& threads, const std::optional<long>& sample_n) {
  cmlab::RunConfig config =
      config_path ? cmlab::load_run_config(*config_path) : cmlab::RunConfig{};
  if (!config_path) config.experiments = cmlab::all_experiments();
  if (seed) config.seed = *seed;
  if (out) config.out_dir = *out;
  if (threads) config.threads = *threads;
  if (sample_n) config.sample_n = *sample_n;
  if (command != "all") config.experiments = {*cmlab::parse_experiment(command)};

  const cmlab::RunSummary summary = cmlab::run(config);
  for (const auto& [experiment, outcome] : summary.outcomes) {
    std::cout << cmlab::to_string(experiment) << ": " << outcome.checks - outcome.failures << "/"
              << outcome.checks << " checks passed";
    for (const auto& file : outcome.files) std::cout << ' ' << file;
    std::cout << '\n';
    for (const auto& note : outcome.failure_notes) std::cout << "  FAIL " << note << '\n';
  }
  std::cout << "summary: " << summary.summary_file.string() << '\n';
  return summary.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and verification lab for central measures on infinite Hermitian matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<long> sample_n;
  int verbosity = 0;

  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Base seed (u64)");
  app.add_option("--out", out, "Output directory");
  app.add_option("--threads", threads, "Worker threads (0 = auto)");
  app.add_option("--verbosity", verbosity, "0..3")->check(CLI::Range(0, 3));

  std::string command;
  const std::pair<const char*, const char*> commands[] = {
      {"sample", "Emit one minor and its spectral measures"},
      {"converge", "Measure convergence of Lambda_n and Sigma_n,a,b"},
      {"norm", "Operator norm bound ||M_n||/n"},
      {"split", "Small-point part ||B_n||/n bound"},
      {"moments", "Moments of ||xi_[n]||^2 against the rising factorial"},
      {"beta", "KS test of Haar column entries against Beta(1, n-1)"},
      {"estimate", "Recover (gamma1, gamma2, points) from one minor"},
      {"cayley", "Cayley transform bridge checks"},
      {"all", "Every experiment selected in the config"},
  };
  for (const auto& [name, description] : commands) {
    auto* sub = app.add_subcommand(name, description);
    sub->callback([&command, name = std::string(name)] { command = name; });
    if (std::string(name) == "sample") sub->add_option("--n", sample_n, "Minor dimension");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  cmlab::set_verbosity(verbosity);

  try {
    return run_command(command, config_path, seed, out, threads, sample_n);
  } catch (const cmlab::Error& e) {
    std::cerr << "cmlab: " << e.what() << '\n';
    return cmlab::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "cmlab: " << e.what() << '\n';
    return 2;
  }
}
