#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cmlab/limits.hpp"
#include "cmlab/measure.hpp"
#include "cmlab/params.hpp"

namespace cmlab {

struct LambdaSeries {
  Interval interval;
  double target = 0.0;          // Lambda_inf(I)
  std::vector<double> values;   // Lambda_n(I) per grid point
  std::vector<double> abs_err;
};

struct SigmaSeries {
  Interval interval;
  IndexPair pair;
  complex target;                // Sigma_inf,a,b(I)
  std::vector<complex> values;   // Sigma_n,a,b(I) per grid point
  std::vector<double> abs_err;
};

/// Empirical trace of the measure convergence for one seeded sample.
struct ConvergenceReport {
  std::size_t replica = 0;
  std::uint64_t seed = 0;
  RawParams params;
  std::vector<Eigen::Index> n_grid;
  std::vector<LambdaSeries> lambda;
  std::vector<SigmaSeries> sigma;
  std::vector<double> norm_over_n;  // ||M_n - gamma1 I|| / n
  double norm_bound = 0.0;
};

/// Decomposes M_n for every n in `n_grid` and compares Lambda_n(I) and
/// Sigma_n,a,b(I) with their limits on the same sample.
///
/// Intervals must lie in R+ or R- and clear every limit atom and 0 by
/// `clearance` (BoundaryTooClose otherwise); pair indices must not exceed the
/// smallest grid dimension (DimensionTooSmall).
ConvergenceReport convergence_run(const ErgodicParams& params, std::uint64_t seed,
                                  const std::vector<Eigen::Index>& n_grid,
                                  const std::vector<Interval>& intervals,
                                  const std::vector<IndexPair>& pairs, double clearance);

/// Replica k runs on rng::replica_seed(seed, k). Output is ordered by replica
/// and independent of `threads`.
std::vector<ConvergenceReport> convergence_replicas(const ErgodicParams& params,
                                                    std::uint64_t seed, std::size_t replicas,
                                                    const std::vector<Eigen::Index>& n_grid,
                                                    const std::vector<Interval>& intervals,
                                                    const std::vector<IndexPair>& pairs,
                                                    double clearance, unsigned threads = 1);

/// 1e-3 times the diameter of {0} together with the atoms of Lambda_inf.
double default_clearance(const ErgodicParams& params);

/// sum_j exp(i mu lambda_j) - sum_l exp(i mu x_l).
complex charfn_error(std::span<const double> nonzero_eigs_over_n, const ErgodicParams& params,
                     double mu);

/// E ||xi_[n]||^{2r} = n (n+1) ... (n+r-1), the Gamma(n, 1) moment.
double moment_oracle(long n, int r);

struct MomentCheck {
  long n = 0;
  int r = 0;
  std::size_t replicas = 0;
  double empirical = 0.0;
  double oracle = 0.0;
  double z = 0.0;  // (empirical - oracle) / standard error
};

/// Monte Carlo estimate of E ||xi_[n]||^{2r}; replicas >= 100.
MomentCheck moment_mc_check(long n, int r, std::size_t replicas, std::uint64_t seed);

struct NormPoint {
  Eigen::Index n = 0;
  double norm_over_n = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// ||M_n - gamma1 I|| / n against norm_bound(params) + slack.
std::vector<NormPoint> norm_check(const CoupledSample& sample,
                                  const std::vector<Eigen::Index>& n_grid, double slack);

struct SplitReport {
  double epsilon = 0.0;
  double b_norm_over_n = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Norm of B_n = sqrt(gamma2) G_n + sum_{|x_l| <= eps} x_l (xi xi* - I) on the
/// sample's fields, against (sum_{|x_l| <= eps} x_l^2 + tail_bound)^(1/2) + slack.
SplitReport split_experiment(const ErgodicParams& params, double epsilon, std::uint64_t seed,
                             Eigen::Index n, double slack);

struct KsResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// CDF of Beta(1, n-1): 1 - (1 - t)^(n-1) on [0, 1].
double beta_one_cdf(long n, double t);

/// One-sample Kolmogorov-Smirnov distance sup |F_N - F|.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf) {
  std::sort(samples.begin(), samples.end());
  const auto count = static_cast<double>(samples.size());
  double distance = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const auto rank = static_cast<double>(i);
    distance = std::max({distance, f - rank / count, (rank + 1.0) / count - f});
  }
  return distance;
}


/// KS test of Haar column entries against Beta(1, n-1) at the asymptotic 1%
/// level 1.63 / sqrt(draws). draws >= 1000.
KsResult beta_tail_test(Eigen::Index n, std::size_t draws, std::uint64_t seed);

struct ParamEstimate {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  std::vector<double> points;  // |x| descending, positive first on ties
};

/// gamma1 = Tr(M_n)/n; points = eigenvalues of (M_n - gamma1 I)/n with
/// |.| >= threshold; gamma2 = max(0, Tr((M_n - gamma1 I)^2)/n^2 - sum x^2).
/// Throws DimensionTooSmall for n < 4.
ParamEstimate estimate_params(const CoupledSample& sample, Eigen::Index n, double threshold);

}  // namespace cmlab
