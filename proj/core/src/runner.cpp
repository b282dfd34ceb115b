#include "cmlab/runner.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cmlab/cayley.hpp"
#include "cmlab/diagnostics.hpp"
#include "cmlab/format.hpp"
#include "cmlab/log.hpp"
#include "cmlab/matrix_io.hpp"
#include "cmlab/parallel.hpp"
#include "cmlab/report.hpp"
#include "cmlab/rng.hpp"
#include "cmlab/spectral.hpp"

#ifndef CMLAB_VERSION
#define CMLAB_VERSION "0.0.0"
#endif

namespace cmlab {
namespace {

using nlohmann::json;

constexpr std::pair<Experiment, const char*> kExperimentNames[] = {
    {Experiment::Sample, "sample"},   {Experiment::Converge, "converge"},
    {Experiment::Norm, "norm"},       {Experiment::Split, "split"},
    {Experiment::Moments, "moments"}, {Experiment::Beta, "beta"},
    {Experiment::Estimate, "estimate"}, {Experiment::Cayley, "cayley"},
};

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::ConfigInvalid, what); }

void check_keys(const json& object, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!object.is_object()) invalid(where + " must be an object");
  for (const auto& item : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* key) { return item.key() == key; })) {
      invalid("unknown key '" + item.key() + "' in " + where);
    }
  }
}

template <class T>
T get(const json& object, const char* key, const std::string& where) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception& e) {
    invalid("bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

template <class T>
void read_if(const json& object, const char* key, T& target, const std::string& where) {
  if (object.contains(key)) target = get<T>(object, key, where);
}

double read_endpoint(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
  }
  invalid("interval endpoint in " + where + " must be a number, \"inf\" or \"-inf\"");
}

void read_params(const json& object, RunConfig& config, const std::string& where) {
  read_if(object, "gamma1", config.raw_params.gamma1, where);
  read_if(object, "gamma2", config.raw_params.gamma2, where);
  read_if(object, "points", config.raw_params.points, where);
  if (object.contains("tail_bound")) {
    config.raw_params.tail_bound = get<double>(object, "tail_bound", where);
  }
  if (object.contains("tail")) {
    const json& tail = object.at("tail");
    check_keys(tail, {"c", "exponent", "tol"}, where + ".tail");
    PowerTailSpec spec;
    read_if(tail, "c", spec.c, where + ".tail");
    read_if(tail, "exponent", spec.exponent, where + ".tail");
    read_if(tail, "tol", spec.tol, where + ".tail");
    config.tail = spec;
  }
}

std::string write_file(const std::filesystem::path& dir, const std::string& name,
                       const std::string& contents) {
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents) || !out.flush()) {
    throw Error(Errc::IoFailure, "cannot write " + path.string());
  }
  return name;
}

template <class Writer>
std::string write_csv(const std::filesystem::path& dir, const std::string& name, Writer&& writer) {
  std::ostringstream os;
  writer(os);
  return write_file(dir, name, os.str());
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

void record(ExperimentOutcome& outcome, bool pass, const std::string& note) {
  ++outcome.checks;
  if (!pass) {
    ++outcome.failures;
    outcome.failure_notes.push_back(note);
  }
}

double interval_clearance(const IntervalSpec& spec, const ErgodicParams& params) {
  return spec.clearance.value_or(default_clearance(params));
}

std::string describe(const Interval& interval) {
  return std::string(interval.lo_closed ? "[" : "(") + format_double(interval.lo) + ", " +
         format_double(interval.hi) + (interval.hi_closed ? "]" : ")");
}

ExperimentOutcome run_sample(const RunConfig& config, const ErgodicParams& params) {
  ExperimentOutcome outcome;
  const CoupledSample sample(params, config.seed);
  const HermitianMinor m = minor(sample, config.sample_n);
  {
    std::ostringstream os;
    write_matrix_text(os, m);
    outcome.files.push_back(write_file(config.out_dir, "minor.txt", os.str()));
  }
  const EigenDecomposition dec = eig_hermitian(m);
  outcome.files.push_back(write_csv(config.out_dir, "lambda_n.csv",
                                    [&](std::ostream& os) { write_measure_csv(os, lambda_measure(dec)); }));
  outcome.files.push_back(write_csv(config.out_dir, "lambda_inf.csv",
                                    [&](std::ostream& os) { write_measure_csv(os, lambda_limit(params)); }));
  for (const auto& [a, b] : config.pairs) {
    if (a > config.sample_n || b > config.sample_n) continue;
    const auto suffix = std::to_string(a) + "_" + std::to_string(b) + ".csv";
    outcome.files.push_back(write_csv(config.out_dir, "sigma_n_" + suffix, [&](std::ostream& os) {
      write_measure_csv(os, sigma_measure(dec, a, b));
    }));
    outcome.files.push_back(write_csv(config.out_dir, "sigma_inf_" + suffix, [&](std::ostream& os) {
      write_measure_csv(os, sigma_limit(sample, a, b));
    }));
  }
  return outcome;
}

ExperimentOutcome run_converge(const RunConfig& config, const ErgodicParams& params) {
  ExperimentOutcome outcome;
  std::vector<Interval> intervals;
  double clearance = std::numeric_limits<double>::infinity();
  for (const IntervalSpec& spec : config.intervals) {
    intervals.push_back(spec.interval);
    clearance = std::min(clearance, interval_clearance(spec, params));
  }
  const auto reports = convergence_replicas(params, config.seed, config.replicas, config.n_grid,
                                            intervals, config.pairs, clearance, config.threads);
  outcome.files.push_back(write_csv(config.out_dir, "converge.csv",
                                    [&](std::ostream& os) { write_converge_csv(os, reports); }));
  emit_plotdata(reports, config.out_dir / "converge_plot.csv");
  outcome.files.push_back("converge_plot.csv");

  const std::size_t last = config.n_grid.size() - 1;
  const std::size_t second_last = last > 0 ? last - 1 : last;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    std::size_t exact = 0;
    for (const auto& report : reports) {
      const auto& series = report.lambda[i];
      if (series.abs_err[last] == 0.0 && series.abs_err[second_last] == 0.0) ++exact;
    }
    const double fraction = static_cast<double>(exact) / static_cast<double>(reports.size());
    record(outcome, fraction >= config.lambda_quorum,
           "Lambda_n" + describe(intervals[i]) + " exact in " + std::to_string(exact) + "/" +
               std::to_string(reports.size()) + " replicas");
  }
  for (std::size_t s = 0; s < reports.front().sigma.size(); ++s) {
    std::vector<double> first_errors;
    std::vector<double> last_errors;
    for (const auto& report : reports) {
      first_errors.push_back(report.sigma[s].abs_err.front());
      last_errors.push_back(report.sigma[s].abs_err[last]);
    }
    const double first = median(first_errors);
    const double final = median(last_errors);
    const bool decreasing = last == 0 || final < first || (final == 0.0 && first == 0.0);
    const auto& series = reports.front().sigma[s];
    record(outcome, decreasing && final <= config.sigma_tolerance,
           "Sigma_n," + std::to_string(series.pair.first) + "," +
               std::to_string(series.pair.second) + describe(series.interval) +
               " median error " + format_double(first) + " -> " + format_double(final));
  }
  return outcome;
}

ExperimentOutcome run_norm(const RunConfig& config, const ErgodicParams& params) {
  ExperimentOutcome outcome;
  std::vector<std::vector<NormPoint>> per_replica(config.replicas);
  parallel_for(config.replicas, config.threads, [&](std::size_t k) {
    per_replica[k] = norm_check(CoupledSample(params, rng::replica_seed(config.seed, k)),
                                config.n_grid, config.norm_slack);
  });
  std::vector<NormRow> rows;
  for (std::size_t k = 0; k < per_replica.size(); ++k) {
    for (const NormPoint& point : per_replica[k]) rows.push_back({k, point});
    const NormPoint& final = per_replica[k].back();
    record(outcome, final.pass,
           "replica " + std::to_string(k) + " norm/n " + format_double(final.norm_over_n) +
               " > " + format_double(final.bound));
  }
  outcome.files.push_back(
      write_csv(config.out_dir, "norm.csv", [&](std::ostream& os) { write_norm_csv(os, rows); }));
  return outcome;
}

ExperimentOutcome run_split(const RunConfig& config, const ErgodicParams& params) {
  ExperimentOutcome outcome;
  std::vector<SplitReport> reports(config.replicas);
  parallel_for(config.replicas, config.threads, [&](std::size_t k) {
    reports[k] = split_experiment(params, config.split_epsilon,
                                  rng::replica_seed(config.seed, k), config.split_n,
                                  config.split_slack);
  });
  outcome.files.push_back(write_csv(config.out_dir, "split.csv", [&](std::ostream& os) {
    os << "replica,epsilon,n,b_norm_over_n,bound,pass\n";
    for (std::size_t k = 0; k < reports.size(); ++k) {
      os << k << ',' << format_double(reports[k].epsilon) << ',' << config.split_n << ','
         << format_double(reports[k].b_norm_over_n) << ',' << format_double(reports[k].bound)
         << ',' << (reports[k].pass ? 1 : 0) << '\n';
    }
  }));
  for (std::size_t k = 0; k < reports.size(); ++k) {
    record(outcome, reports[k].pass,
           "replica " + std::to_string(k) + " ||B_n||/n " +
               format_double(reports[k].b_norm_over_n) + " > " + format_double(reports[k].bound));
  }
  return outcome;
}

ExperimentOutcome run_moments(const RunConfig& config) {
  ExperimentOutcome outcome;
  std::vector<std::pair<long, int>> cases;
  for (const long n : config.moment_n) {
    for (const int r : config.moment_r) cases.emplace_back(n, r);
  }
  std::vector<MomentCheck> checks(cases.size());
  parallel_for(cases.size(), config.threads, [&](std::size_t i) {
    checks[i] = moment_mc_check(cases[i].first, cases[i].second, config.moment_replicas,
                                config.seed);
  });
  outcome.files.push_back(write_csv(config.out_dir, "moments.csv",
                                    [&](std::ostream& os) { write_moments_csv(os, checks); }));
  for (const MomentCheck& check : checks) {
    record(outcome, std::abs(check.z) <= config.moment_z_max,
           "moment n=" + std::to_string(check.n) + " r=" + std::to_string(check.r) +
               " z=" + format_double(check.z));
  }
  return outcome;
}

ExperimentOutcome run_beta(const RunConfig& config) {
  ExperimentOutcome outcome;
  std::vector<KsResult> results(config.beta_n.size());
  parallel_for(results.size(), config.threads, [&](std::size_t i) {
    results[i] = beta_tail_test(config.beta_n[i], config.beta_draws, config.seed);
  });
  outcome.files.push_back(write_csv(config.out_dir, "beta.csv", [&](std::ostream& os) {
    os << "n,draws,ks,threshold,pass\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      os << config.beta_n[i] << ',' << config.beta_draws << ','
         << format_double(results[i].statistic) << ',' << format_double(results[i].threshold)
         << ',' << (results[i].pass ? 1 : 0) << '\n';
    }
  }));
  for (std::size_t i = 0; i < results.size(); ++i) {
    record(outcome, results[i].pass,
           "KS n=" + std::to_string(config.beta_n[i]) + " D=" +
               format_double(results[i].statistic));
  }
  return outcome;
}

ExperimentOutcome run_estimate(const RunConfig& config, const ErgodicParams& params) {
  ExperimentOutcome outcome;
  const ParamEstimate estimate = estimate_params(CoupledSample(params, config.seed),
                                                 config.estimate_n, config.estimate_threshold);
  std::vector<double> resolvable;
  for (const double x : params.points()) {
    if (std::abs(x) >= config.estimate_threshold) resolvable.push_back(x);
  }
  outcome.files.push_back(write_csv(config.out_dir, "estimate.csv", [&](std::ostream& os) {
    os << "quantity,index,estimate,truth\n";
    os << "gamma1,," << format_double(estimate.gamma1) << ',' << format_double(params.gamma1())
       << '\n';
    os << "gamma2,," << format_double(estimate.gamma2) << ',' << format_double(params.gamma2())
       << '\n';
    for (std::size_t i = 0; i < std::max(estimate.points.size(), resolvable.size()); ++i) {
      os << "point," << i + 1 << ','
         << (i < estimate.points.size() ? format_double(estimate.points[i]) : "") << ','
         << (i < resolvable.size() ? format_double(resolvable[i]) : "") << '\n';
    }
  }));
  if (config.estimate_tolerance) {
    const double tol = *config.estimate_tolerance;
    bool points_ok = estimate.points.size() == resolvable.size();
    for (std::size_t i = 0; points_ok && i < resolvable.size(); ++i) {
      points_ok = std::abs(estimate.points[i] - resolvable[i]) <= tol;
    }
    record(outcome, points_ok, "estimated points outside tolerance");
    record(outcome, std::abs(estimate.gamma2 - params.gamma2()) <= tol,
           "gamma2 estimate " + format_double(estimate.gamma2));
  }
  return outcome;
}

ExperimentOutcome run_cayley(const RunConfig& config, const ErgodicParams& params) {
  struct Row {
    double unitarity = 0.0;
    double correspondence = 0.0;
    double roundtrip = 0.0;
  };
  ExperimentOutcome outcome;
  const Eigen::Index n = config.cayley_n;
  std::vector<Row> rows(config.replicas);
  parallel_for(config.replicas, config.threads, [&](std::size_t k) {
    const HermitianMinor m = minor(CoupledSample(params, rng::replica_seed(config.seed, k)), n);
    const UnitaryMinor u = cayley(m);
    const EigenDecomposition dec = eig_hermitian(m);
    const HermitianMinor back = inverse_cayley(u);
    rows[k] = {unitarity_defect(u.matrix()), correspondence_defect(u, dec),
               (m.matrix() - back.matrix()).norm() / std::max(1.0, m.matrix().norm())};
  });
  const double unitarity_tol = 1e-10 * static_cast<double>(n);
  outcome.files.push_back(write_csv(config.out_dir, "cayley.csv", [&](std::ostream& os) {
    os << "replica,n,unitarity,correspondence,roundtrip\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      os << k << ',' << n << ',' << format_double(rows[k].unitarity) << ','
         << format_double(rows[k].correspondence) << ',' << format_double(rows[k].roundtrip)
         << '\n';
    }
  }));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    record(outcome,
           rows[k].unitarity <= unitarity_tol && rows[k].correspondence <= 1e-8 &&
               rows[k].roundtrip <= 1e-8,
           "replica " + std::to_string(k) + " Cayley defects out of tolerance");
  }
  return outcome;
}

json params_json(const ErgodicParams& params) {
  return {{"gamma1", params.gamma1()},
          {"gamma2", params.gamma2()},
          {"points", std::vector<double>(params.points().begin(), params.points().end())},
          {"tail_bound", params.tail_bound()}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace

std::string to_string(Experiment e) {
  for (const auto& [value, name] : kExperimentNames) {
    if (value == e) return name;
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(const std::string& name) {
  for (const auto& [value, text] : kExperimentNames) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::set<Experiment> all_experiments() {
  return {Experiment::Converge, Experiment::Norm,     Experiment::Split, Experiment::Moments,
          Experiment::Beta,     Experiment::Estimate, Experiment::Cayley};
}

ErgodicParams RunConfig::params() const {
  if (tail) return with_power_tail(raw_params, tail->c, tail->exponent, tail->tol);
  return ErgodicParams::validate(raw_params);
}

RunConfig parse_run_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    invalid(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(root,
             {"params", "gamma1", "gamma2", "points", "tail", "tail_bound", "seed", "n_grid",
              "intervals", "pairs", "replicas", "experiments", "out", "threads", "converge",
              "norm", "split", "moments", "beta", "estimate", "cayley", "sample"},
             "config");
  RunConfig config;
  if (root.contains("params")) {
    check_keys(root.at("params"), {"gamma1", "gamma2", "points", "tail", "tail_bound"}, "params");
    read_params(root.at("params"), config, "params");
  }
  read_params(root, config, "config");

  read_if(root, "seed", config.seed, "config");
  read_if(root, "n_grid", config.n_grid, "config");
  read_if(root, "replicas", config.replicas, "config");
  read_if(root, "threads", config.threads, "config");
  if (root.contains("out")) config.out_dir = get<std::string>(root, "out", "config");

  if (root.contains("intervals")) {
    const json& list = root.at("intervals");
    if (!list.is_array()) invalid("intervals must be an array");
    for (const json& item : list) {
      check_keys(item, {"lo", "hi", "lo_closed", "hi_closed", "clearance"}, "intervals[]");
      IntervalSpec spec;
      if (!item.contains("lo") || !item.contains("hi")) invalid("interval needs lo and hi");
      spec.interval.lo = read_endpoint(item.at("lo"), "intervals[]");
      spec.interval.hi = read_endpoint(item.at("hi"), "intervals[]");
      read_if(item, "lo_closed", spec.interval.lo_closed, "intervals[]");
      read_if(item, "hi_closed", spec.interval.hi_closed, "intervals[]");
      if (item.contains("clearance")) spec.clearance = get<double>(item, "clearance", "intervals[]");
      config.intervals.push_back(spec);
    }
  }
  if (root.contains("pairs")) {
    config.pairs.clear();
    for (const auto& pair : get<std::vector<std::array<Eigen::Index, 2>>>(root, "pairs", "config")) {
      config.pairs.emplace_back(pair[0], pair[1]);
    }
  }
  if (root.contains("experiments")) {
    for (const auto& name : get<std::vector<std::string>>(root, "experiments", "config")) {
      const auto experiment = parse_experiment(name);
      if (!experiment) invalid("unknown experiment '" + name + "'");
      config.experiments.insert(*experiment);
    }
  } else {
    config.experiments = all_experiments();
  }

  if (root.contains("converge")) {
    const json& section = root.at("converge");
    check_keys(section, {"lambda_quorum", "sigma_tolerance"}, "converge");
    read_if(section, "lambda_quorum", config.lambda_quorum, "converge");
    read_if(section, "sigma_tolerance", config.sigma_tolerance, "converge");
  }
  if (root.contains("norm")) {
    check_keys(root.at("norm"), {"slack"}, "norm");
    read_if(root.at("norm"), "slack", config.norm_slack, "norm");
  }
  if (root.contains("split")) {
    const json& section = root.at("split");
    check_keys(section, {"epsilon", "n", "slack"}, "split");
    read_if(section, "epsilon", config.split_epsilon, "split");
    read_if(section, "n", config.split_n, "split");
    read_if(section, "slack", config.split_slack, "split");
  }
  if (root.contains("moments")) {
    const json& section = root.at("moments");
    check_keys(section, {"n", "r", "replicas", "z_max"}, "moments");
    read_if(section, "n", config.moment_n, "moments");
    read_if(section, "r", config.moment_r, "moments");
    read_if(section, "replicas", config.moment_replicas, "moments");
    read_if(section, "z_max", config.moment_z_max, "moments");
  }
  if (root.contains("beta")) {
    const json& section = root.at("beta");
    check_keys(section, {"n", "draws"}, "beta");
    read_if(section, "n", config.beta_n, "beta");
    read_if(section, "draws", config.beta_draws, "beta");
  }
  if (root.contains("estimate")) {
    const json& section = root.at("estimate");
    check_keys(section, {"n", "threshold", "tolerance"}, "estimate");
    read_if(section, "n", config.estimate_n, "estimate");
    read_if(section, "threshold", config.estimate_threshold, "estimate");
    if (section.contains("tolerance")) {
      config.estimate_tolerance = get<double>(section, "tolerance", "estimate");
    }
  }
  if (root.contains("cayley")) {
    check_keys(root.at("cayley"), {"n"}, "cayley");
    read_if(root.at("cayley"), "n", config.cayley_n, "cayley");
  }
  if (root.contains("sample")) {
    check_keys(root.at("sample"), {"n"}, "sample");
    read_if(root.at("sample"), "n", config.sample_n, "sample");
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

void validate_run_config(const RunConfig& config) {
  if (config.experiments.empty()) invalid("no experiment selected");
  ErgodicParams params = [&] {
    try {
      return config.params();
    } catch (const Error& e) {
      invalid(std::string("params: ") + e.what());
    }
  }();
  if (config.replicas < 1) invalid("replicas must be >= 1");
  const auto& has = [&](Experiment e) { return config.experiments.contains(e); };

  if (has(Experiment::Converge) || has(Experiment::Norm)) {
    if (config.n_grid.empty() || config.n_grid.front() < 1 ||
        !std::is_sorted(config.n_grid.begin(), config.n_grid.end(), std::less_equal<>{})) {
      invalid("n_grid must be a nonempty strictly increasing list of positive dimensions");
    }
  }
  if (has(Experiment::Converge)) {
    if (config.intervals.empty()) invalid("converge needs at least one interval");
    for (const auto& [a, b] : config.pairs) {
      if (a < 1 || b < 1 || a > config.n_grid.front() || b > config.n_grid.front()) {
        invalid("pair (" + std::to_string(a) + "," + std::to_string(b) +
                ") outside 1..min(n_grid)");
      }
    }
    const AtomicMeasure lambda_inf = lambda_limit(params);
    for (const IntervalSpec& spec : config.intervals) {
      if (spec.interval.contains(0.0)) invalid("interval " + describe(spec.interval) + " contains 0");
      const double clearance = interval_clearance(spec, params);
      if (!(clearance > 0.0)) invalid("clearance must be positive");
      try {
        measure_query(lambda_inf, spec.interval, clearance, true);
      } catch (const Error& e) {
        invalid("interval " + describe(spec.interval) + ": " + e.what());
      }
    }
  }
  if (has(Experiment::Split) && (!(config.split_epsilon > 0.0) || config.split_n < 1)) {
    invalid("split needs epsilon > 0 and n >= 1");
  }
  if (has(Experiment::Moments)) {
    if (config.moment_replicas < 100) invalid("moments need >= 100 replicas");
    for (const long n : config.moment_n) {
      if (n < 1) invalid("moment dimensions must be >= 1");
    }
    for (const int r : config.moment_r) {
      if (r < 1) invalid("moment orders must be >= 1");
    }
  }
  if (has(Experiment::Beta)) {
    if (config.beta_draws < 1000) invalid("beta needs >= 1000 draws");
    for (const auto n : config.beta_n) {
      if (n < 2) invalid("beta dimensions must be >= 2");
    }
  }
  if (has(Experiment::Estimate) && (config.estimate_n < 4 || !(config.estimate_threshold > 0.0))) {
    invalid("estimate needs n >= 4 and threshold > 0");
  }
  if (has(Experiment::Cayley) && config.cayley_n < 1) invalid("cayley needs n >= 1");
  if (has(Experiment::Sample) && config.sample_n < 1) invalid("sample needs n >= 1");
}

RunSummary run(const RunConfig& config) {
  validate_run_config(config);
  const ErgodicParams params = config.params();
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw Error(Errc::IoFailure, "cannot create " + config.out_dir.string());

  RunSummary summary;
  for (const Experiment experiment : config.experiments) {
    log_line(1, "running " + to_string(experiment));
    ExperimentOutcome outcome;
    switch (experiment) {
      case Experiment::Sample: outcome = run_sample(config, params); break;
      case Experiment::Converge: outcome = run_converge(config, params); break;
      case Experiment::Norm: outcome = run_norm(config, params); break;
      case Experiment::Split: outcome = run_split(config, params); break;
      case Experiment::Moments: outcome = run_moments(config); break;
      case Experiment::Beta: outcome = run_beta(config); break;
      case Experiment::Estimate: outcome = run_estimate(config, params); break;
      case Experiment::Cayley: outcome = run_cayley(config, params); break;
    }
    for (const auto& note : outcome.failure_notes) log_line(1, to_string(experiment) + ": FAIL " + note);
    summary.outcomes.emplace(experiment, std::move(outcome));
  }

  json experiments = json::object();
  std::size_t failures = 0;
  for (const auto& [experiment, outcome] : summary.outcomes) {
    failures += outcome.failures;
    experiments[to_string(experiment)] = {{"files", outcome.files},
                                          {"checks", outcome.checks},
                                          {"failures", outcome.failures},
                                          {"failure_notes", outcome.failure_notes},
                                          {"pass", outcome.failures == 0}};
  }
  summary.exit_code = failures == 0 ? 0 : 3;
  const json document = {{"tool", "cmlab"},
                         {"version", CMLAB_VERSION},
                         {"seed", config.seed},
                         {"replicas", config.replicas},
                         {"params", params_json(params)},
                         {"experiments", experiments},
                         {"all_pass", failures == 0},
                         {"exit_code", summary.exit_code},
                         {"generated_at", utc_timestamp()}};
  summary.summary_file = config.out_dir / write_file(config.out_dir, "summary.json", document.dump(2) + "\n");
  return summary;
}

int exit_code_for(const Error& error) noexcept {
  switch (error.code()) {
    case Errc::ConvergenceFailure:
    case Errc::NumericalSingularity:
    case Errc::UnitEigenvalue:
    case Errc::NoPhaseAnchor:
    case Errc::DegenerateEigenvalue:
      return 2;
    default:
      return 1;
  }
}

}  // namespace cmlab
