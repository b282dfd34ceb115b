#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmlab/error.hpp"
#include "cmlab/limits.hpp"
#include "cmlab/measure.hpp"
#include "cmlab/params.hpp"

namespace cmlab {

enum class Experiment { Sample, Converge, Norm, Split, Moments, Beta, Estimate, Cayley };

std::string to_string(Experiment e);
std::optional<Experiment> parse_experiment(const std::string& name);
/// Every experiment selected by "all" (sample is only run on request).
std::set<Experiment> all_experiments();

struct IntervalSpec {
  Interval interval;
  std::optional<double> clearance;  // defaults to default_clearance(params)
};

struct PowerTailSpec {
  double c = 1.0;
  double exponent = 1.0;
  double tol = 0.01;
};

struct RunConfig {
  RawParams raw_params;
  std::optional<PowerTailSpec> tail;

  std::uint64_t seed = 0;
  std::vector<Eigen::Index> n_grid{32, 64, 128, 256, 512};
  std::vector<IntervalSpec> intervals;
  std::vector<IndexPair> pairs{{1, 1}};
  std::size_t replicas = 1;
  std::set<Experiment> experiments;
  std::filesystem::path out_dir = "cmlab-out";
  unsigned threads = 1;

  // converge
  double lambda_quorum = 0.95;  // replicas exact at the two largest n
  double sigma_tolerance = 0.2;  // median error at the largest n
  // norm
  double norm_slack = 0.25;
  // split
  double split_epsilon = 0.1;
  Eigen::Index split_n = 512;
  double split_slack = 0.2;
  // moments
  std::vector<long> moment_n{10};
  std::vector<int> moment_r{1, 2, 3};
  std::size_t moment_replicas = 100000;
  double moment_z_max = 4.0;
  // beta
  std::vector<Eigen::Index> beta_n{2, 8, 32};
  std::size_t beta_draws = 10000;
  // estimate
  Eigen::Index estimate_n = 512;
  double estimate_threshold = 0.5;
  std::optional<double> estimate_tolerance;
  // cayley
  Eigen::Index cayley_n = 64;
  // sample
  Eigen::Index sample_n = 8;

  /// Canonical params after merging explicit points with the tail.
  ErgodicParams params() const;
};

/// Parses the JSON config. Throws ConfigInvalid with the offending key.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Checks everything that can be checked before running: params, a nonempty
/// experiment set, grid ordering, interval clearance against the limit atoms.
/// Throws ConfigInvalid.
void validate_run_config(const RunConfig& config);

struct ExperimentOutcome {
  std::vector<std::string> files;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_notes;
};

struct RunSummary {
  std::map<Experiment, ExperimentOutcome> outcomes;
  std::filesystem::path summary_file;
  int exit_code = 0;  // 0 pass, 1 config, 2 numerical, 3 acceptance failure
};

/// Runs the selected experiments, writing one CSV per experiment into
/// out_dir and summary.json last. CSV bytes depend only on (config, seed).
/// Throws Error; see exit_code_for for the exit-status mapping.
RunSummary run(const RunConfig& config);

/// 1 for configuration and I/O errors, 2 for numerical failures.
int exit_code_for(const Error& error) noexcept;

}  // namespace cmlab
