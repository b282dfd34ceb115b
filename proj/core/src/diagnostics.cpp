#include "cmlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmlab/error.hpp"
#include "cmlab/log.hpp"
#include "cmlab/parallel.hpp"
#include "cmlab/rng.hpp"
#include "cmlab/spectral.hpp"

namespace cmlab {
namespace {

void validate_grid(const std::vector<Eigen::Index>& n_grid) {
  if (n_grid.empty()) throw Error(Errc::PreconditionViolation, "n_grid is empty");
  if (n_grid.front() < 1) throw Error(Errc::PreconditionViolation, "n_grid entries must be >= 1");
  if (!std::is_sorted(n_grid.begin(), n_grid.end(), std::less_equal<>{})) {
    throw Error(Errc::PreconditionViolation, "n_grid must be strictly increasing");
  }
}

}  // namespace

ConvergenceReport convergence_run(const ErgodicParams& params, std::uint64_t seed,
                                  const std::vector<Eigen::Index>& n_grid,
                                  const std::vector<Interval>& intervals,
                                  const std::vector<IndexPair>& pairs, double clearance) {
  validate_grid(n_grid);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b < 1) throw Error(Errc::IndexOutOfRange, "pair indices are 1-based");
    if (a > n_grid.front() || b > n_grid.front()) {
      throw Error(Errc::DimensionTooSmall,
                  "pair index exceeds the smallest dimension " + std::to_string(n_grid.front()));
    }
  }

  const CoupledSample sample(params, seed);
  const LimitPack limits = build_limit_pack(sample, pairs);

  ConvergenceReport report;
  report.seed = seed;
  report.params = params.raw();
  report.n_grid = n_grid;
  report.norm_bound = limits.norm_bound;
  for (const Interval& interval : intervals) {
    if (interval.contains(0.0)) {
      throw Error(Errc::PreconditionViolation, "intervals must lie in R+ or R-");
    }
    const double target = measure_query(limits.lambda_inf, interval, clearance, true).real();
    report.lambda.push_back({interval, target, {}, {}});
    for (const auto& pair : pairs) {
      report.sigma.push_back(
          {interval, pair, measure_sum(limits.sigma_inf.at(pair), interval), {}, {}});
    }
  }

  for (const Eigen::Index n : n_grid) {
    const EigenDecomposition dec = eig_hermitian(minor(sample, n));
    const AtomicMeasure lambda_n = lambda_measure(dec);
    for (auto& series : report.lambda) {
      const double value = measure_sum(lambda_n, series.interval).real();
      series.values.push_back(value);
      series.abs_err.push_back(std::abs(value - series.target));
    }
    std::map<IndexPair, AtomicMeasure> sigma_n;
    for (const auto& pair : pairs) {
      sigma_n.emplace(pair, sigma_measure(dec, pair.first, pair.second));
    }
    for (auto& series : report.sigma) {
      const complex value = measure_sum(sigma_n.at(series.pair), series.interval);
      series.values.push_back(value);
      series.abs_err.push_back(std::abs(value - series.target));
    }
    report.norm_over_n.push_back(centered_spectral_radius(dec.eigenvalues, params.gamma1()) /
                                 static_cast<double>(n));
    log_line(3, "convergence_run seed=" + std::to_string(seed) + " n=" + std::to_string(n));
  }
  return report;
}

std::vector<ConvergenceReport> convergence_replicas(const ErgodicParams& params,
                                                    std::uint64_t seed, std::size_t replicas,
                                                    const std::vector<Eigen::Index>& n_grid,
                                                    const std::vector<Interval>& intervals,
                                                    const std::vector<IndexPair>& pairs,
                                                    double clearance, unsigned threads) {
  std::vector<ConvergenceReport> reports(replicas);
  parallel_for(replicas, threads, [&](std::size_t k) {
    reports[k] = convergence_run(params, rng::replica_seed(seed, k), n_grid, intervals, pairs,
                                 clearance);
    reports[k].replica = k;
  });
  return reports;
}

double default_clearance(const ErgodicParams& params) {
  double lo = 0.0;
  double hi = 0.0;
  for (const double x : params.points()) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double diameter = hi - lo;
  return diameter > 0.0 ? 1e-3 * diameter : 1e-3;
}

complex charfn_error(std::span<const double> nonzero_eigs_over_n, const ErgodicParams& params,
                     double mu) {
  complex total = 0.0;
  for (const double lambda : nonzero_eigs_over_n) total += std::polar(1.0, mu * lambda);
  for (const double x : params.points()) total -= std::polar(1.0, mu * x);
  return total;
}

double moment_oracle(long n, int r) {
  if (n < 1 || r < 1) throw Error(Errc::PreconditionViolation, "moment_oracle needs n, r >= 1");
  double product = 1.0;
  for (int k = 0; k < r; ++k) product *= static_cast<double>(n + k);
  return product;
}

MomentCheck moment_mc_check(long n, int r, std::size_t replicas, std::uint64_t seed) {
  if (replicas < 100) throw Error(Errc::PreconditionViolation, "moment_mc_check needs >= 100 replicas");
  MomentCheck out{n, r, replicas, 0.0, moment_oracle(n, r), 0.0};
  // Welford running mean and variance.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < replicas; ++k) {
    double squared_norm = 0.0;
    for (long j = 0; j < n; ++j) {
      squared_norm += std::norm(rng::complex_gaussian(seed, rng::Field::Moment,
                                                      static_cast<std::uint32_t>(k),
                                                      static_cast<std::uint32_t>(j)));
    }
    const double value = std::pow(squared_norm, r);
    const double delta = value - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (value - mean);
  }
  const auto count = static_cast<double>(replicas);
  const double standard_error = std::sqrt(m2 / (count - 1.0) / count);
  out.empirical = mean;
  out.z = standard_error > 0.0 ? (mean - out.oracle) / standard_error : 0.0;
  return out;
}

std::vector<NormPoint> norm_check(const CoupledSample& sample,
                                  const std::vector<Eigen::Index>& n_grid, double slack) {
  validate_grid(n_grid);
  const double bound = norm_bound(sample.params()) + slack;
  MinorParts centered;
  centered.drift = false;
  std::vector<NormPoint> out;
  for (const Eigen::Index n : n_grid) {
    const double radius = centered_spectral_radius(hermitian_eigenvalues(minor(sample, n, centered)), 0.0);
    const double ratio = radius / static_cast<double>(n);
    out.push_back({n, ratio, bound, ratio <= bound});
  }
  return out;
}

SplitReport split_experiment(const ErgodicParams& params, double epsilon, std::uint64_t seed,
                             Eigen::Index n, double slack) {
  if (!(epsilon > 0.0)) throw Error(Errc::PreconditionViolation, "epsilon must be positive");
  if (n < 1) throw Error(Errc::PreconditionViolation, "dimension must be >= 1");
  MinorParts small_part;
  small_part.drift = false;
  small_part.points = MinorParts::Points::AtMost;
  small_part.epsilon = epsilon;

  double small_squares = 0.0;
  const auto points = params.points();
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    if (std::abs(*it) <= epsilon) small_squares += *it * *it;
  }

  const CoupledSample sample(params, seed);
  const double radius =
      centered_spectral_radius(hermitian_eigenvalues(minor(sample, n, small_part)), 0.0);
  SplitReport report;
  report.epsilon = epsilon;
  report.b_norm_over_n = radius / static_cast<double>(n);
  report.bound = std::sqrt(small_squares + params.tail_bound()) + slack;
  report.pass = report.b_norm_over_n <= report.bound;
  return report;
}

double beta_one_cdf(long n, double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n - 1) * std::log1p(-t));
}

KsResult beta_tail_test(Eigen::Index n, std::size_t draws, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::PreconditionViolation, "beta_tail_test needs n >= 2");
  if (draws < 1000) throw Error(Errc::PreconditionViolation, "beta_tail_test needs >= 1000 draws");
  KsResult result;
  result.statistic = ks_statistic(haar_column_entry_samples(n, draws, seed),
                                  [n](double t) { return beta_one_cdf(n, t); });
  result.threshold = 1.63 / std::sqrt(static_cast<double>(draws));
  result.pass = result.statistic <= result.threshold;
  return result;
}

ParamEstimate estimate_params(const CoupledSample& sample, Eigen::Index n, double threshold) {
  if (n < 4) throw Error(Errc::DimensionTooSmall, "estimate_params needs n >= 4");
  if (!(threshold > 0.0)) throw Error(Errc::PreconditionViolation, "threshold must be positive");
  const HermitianMinor m = minor(sample, n);
  const auto size = static_cast<double>(n);

  ParamEstimate estimate;
  estimate.gamma1 = m.matrix().diagonal().real().sum() / size;
  Matrix centered = m.matrix();
  centered.diagonal().array() -= estimate.gamma1;

  const RealVector scaled = hermitian_eigenvalues(HermitianMinor(centered / size));
  RawParams raw;
  double squares = 0.0;
  for (const double value : scaled) {
    if (std::abs(value) >= threshold) raw.points.push_back(value);
  }
  for (const double value : raw.points) squares += value * value;
  estimate.gamma2 = std::max(0.0, centered.squaredNorm() / (size * size) - squares);
  const ErgodicParams canonical = ErgodicParams::validate(raw);
  estimate.points.assign(canonical.points().begin(), canonical.points().end());
  return estimate;
}

}  // namespace cmlab
