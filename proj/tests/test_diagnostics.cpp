#include <cmath>
#include <functional>

#include "cmlab/diagnostics.hpp"
#include "cmlab/rng.hpp"
#include "cmlab/spectral.hpp"
#include "support.hpp"

using cmlab::complex;
using cmlab::CoupledSample;
using cmlab::Interval;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

cmlab::ErgodicParams params(double g1, double g2, std::vector<double> points, double tail = 0.0) {
  return cmlab::ErgodicParams::validate({g1, g2, std::move(points), tail});
}

// E (sum_j |xi_j|^2)^r by expanding the power over index tuples; the j-th
// coordinate appearing m times contributes E|xi|^{2m} = m!.
double brute_force_moment(int n, int r) {
  double total = 0.0;
  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  std::function<void(int)> walk = [&](int depth) {
    if (depth == r) {
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int j : tuple) ++count[static_cast<std::size_t>(j)];
      double term = 1.0;
      for (int c : count) term *= std::tgamma(c + 1.0);
      total += term;
      return;
    }
    for (int j = 0; j < n; ++j) {
      tuple[static_cast<std::size_t>(depth)] = j;
      walk(depth + 1);
    }
  };
  walk(0);
  return total;
}

}  // namespace

TEST_CASE("convergence_run counts the isolated atom exactly") {
  const auto report = cmlab::convergence_run(params(0, 0, {2.0, -1.0}), 3, {32, 64, 128, 256, 512},
                                             {{1.5, 2.5}}, {{1, 1}, {1, 2}}, 1e-3);
  REQUIRE(report.lambda.size() == 1);
  const auto& series = report.lambda[0];
  CHECK(series.target == 1.0);
  CHECK(series.values.size() == 5);
  CHECK(series.values[3] == 1.0);
  CHECK(series.values[4] == 1.0);
  for (double v : series.values) CHECK(v == std::floor(v));
  CHECK(report.sigma.size() == 2);
  for (const auto& s : report.sigma) {
    CHECK(s.values.size() == 5);
    for (double e : s.abs_err) CHECK(e >= 0.0);
  }
  CHECK(report.norm_over_n.size() == 5);
}

TEST_CASE("convergence_run with a pure Gaussian part sees no atoms") {
  const auto report =
      cmlab::convergence_run(params(0, 1, {}), 4, {64, 256}, {{0.5, inf, false, false}}, {}, 1e-3);
  CHECK(report.lambda[0].target == 0.0);
  CHECK(report.lambda[0].values.back() == 0.0);
}

TEST_CASE("convergence_run validation") {
  const auto p = params(0, 0, {2.0, -1.0});
  CHECK_ERRC(cmlab::convergence_run(p, 1, {32}, {{1.5, 2.0 + 1e-5}}, {}, 1e-3),
             cmlab::Errc::BoundaryTooClose);
  CHECK_ERRC(cmlab::convergence_run(p, 1, {8, 16}, {{1.5, 2.5}}, {{9, 1}}, 1e-3),
             cmlab::Errc::DimensionTooSmall);
  CHECK_ERRC(cmlab::convergence_run(p, 1, {16, 8}, {{1.5, 2.5}}, {}, 1e-3),
             cmlab::Errc::PreconditionViolation);
  CHECK_ERRC(cmlab::convergence_run(p, 1, {16}, {{-0.5, 0.5}}, {}, 1e-3),
             cmlab::Errc::PreconditionViolation);
  CHECK(cmlab::default_clearance(p) == doctest::Approx(3e-3));
  CHECK(cmlab::default_clearance(params(0, 1, {})) == 1e-3);
}

TEST_CASE("sigma errors shrink in most replicas") {
  const auto reports = cmlab::convergence_replicas(params(0, 0, {2.0, -1.0}), 7, 100, {16, 256},
                                                   {{1.5, 2.5}}, {{1, 1}}, 1e-3);
  int improved = 0;
  for (const auto& r : reports) {
    improved += r.sigma[0].abs_err.back() <= r.sigma[0].abs_err.front();
  }
  CHECK(improved >= 80);
}

TEST_CASE("convergence reports are conjugate symmetric and thread independent") {
  const auto p = params(0, 0.5, {3.0, -1.5, 1.0});
  const std::vector<Interval> intervals{{2.0, 4.0}, {-inf, -1.0, true, false}};
  const auto one = cmlab::convergence_replicas(p, 5, 4, {16, 48}, intervals, {{1, 2}, {2, 1}}, 1e-3, 1);
  const auto many = cmlab::convergence_replicas(p, 5, 4, {16, 48}, intervals, {{1, 2}, {2, 1}}, 1e-3, 8);
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].seed == cmlab::rng::replica_seed(5, k));
    CHECK(one[k].seed == many[k].seed);
    for (std::size_t s = 0; s < one[k].sigma.size(); ++s) {
      CHECK(one[k].sigma[s].values == many[k].sigma[s].values);
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      const auto& ab = one[k].sigma[2 * i];
      const auto& ba = one[k].sigma[2 * i + 1];
      REQUIRE(ab.pair == cmlab::IndexPair{1, 2});
      REQUIRE(ba.pair == cmlab::IndexPair{2, 1});
      for (std::size_t n = 0; n < ab.values.size(); ++n) CHECK(ab.values[n] == std::conj(ba.values[n]));
      CHECK(ab.target == std::conj(ba.target));
    }
  }
}

TEST_CASE("charfn_error") {
  const auto p = params(0, 0, {2.0, -1.0});
  const std::vector<double> exact{2.0, -1.0};
  CHECK(cmlab::charfn_error(exact, p, 0.0) == complex(0.0));
  CHECK(std::abs(cmlab::charfn_error(exact, p, 1.3)) < 1e-15);

  const CoupledSample s(p, 6);
  std::vector<double> errors;
  for (Eigen::Index n : {25, 400}) {
    const auto eig = cmlab::lowrank_spectrum(s, n);
    std::vector<double> scaled;
    for (Eigen::Index i = 0; i < eig.size(); ++i) scaled.push_back(eig(i) / static_cast<double>(n));
    errors.push_back(std::abs(cmlab::charfn_error(scaled, p, 1.0)));
  }
  CHECK(errors.back() < 0.1);
  CHECK(errors.back() < errors.front());
}

TEST_CASE("moment_oracle") {
  CHECK(cmlab::moment_oracle(3, 2) == 12.0);
  CHECK(cmlab::moment_oracle(17, 1) == 17.0);
  CHECK(cmlab::moment_oracle(1, 4) == 24.0);
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= 4; ++r) {
      CHECK(cmlab::moment_oracle(n, r) == brute_force_moment(n, r));
      CHECK(cmlab::moment_oracle(n, r) >= std::pow(n, r));
      CHECK(cmlab::moment_oracle(n, r) <= std::pow(n + r, r));
    }
  }
  // Expansion n^r + r(r-1)/2 n^(r-1) is exact at r = 2.
  for (long n : {5L, 50L, 500L}) CHECK(cmlab::moment_oracle(n, 2) == n * n + n);
}

TEST_CASE("moment_mc_check") {
  auto check = cmlab::moment_mc_check(10, 2, 100000, 1);
  CHECK(check.oracle == 110.0);
  CHECK(std::abs(check.z) <= 4.0);
  check = cmlab::moment_mc_check(2, 3, 100000, 2);
  CHECK(check.oracle == 24.0);
  CHECK(std::abs(check.z) <= 4.0);
  check = cmlab::moment_mc_check(10, 1, 1000, 3);
  CHECK(check.empirical == doctest::Approx(10.0).epsilon(0.05));
  CHECK_ERRC(cmlab::moment_mc_check(10, 1, 99, 3), cmlab::Errc::PreconditionViolation);
}

TEST_CASE("norm_check examples") {
  auto points = cmlab::norm_check(CoupledSample(params(4.5, 0, {}), 1), {8, 32}, 0.0);
  for (const auto& pt : points) {
    CHECK(pt.norm_over_n == 0.0);
    CHECK(pt.pass);
  }
  points = cmlab::norm_check(CoupledSample(params(0, 0, {2.0, -1.0}), 8), {64, 512}, 0.25);
  CHECK(points.back().pass);
  CHECK(points.back().bound == doctest::Approx(std::sqrt(5.0) + 0.25));
  points = cmlab::norm_check(CoupledSample(params(0, 1, {}), 9), {512}, 0.25);
  CHECK(points.back().pass);
  CHECK(points.back().norm_over_n < 3.0 / std::sqrt(512.0));
}

TEST_CASE("split_experiment examples") {
  auto report = cmlab::split_experiment(params(0, 0, {2.0, -1.0}), 0.5, 1, 64, 0.2);
  CHECK(report.b_norm_over_n == 0.0);
  CHECK(report.bound == 0.2);
  CHECK(report.pass);

  const auto tail = cmlab::with_power_tail({0, 0, {}, {}}, 1.0, 1.0, 0.01);
  report = cmlab::split_experiment(tail, 0.1, 2, 512, 0.2);
  CHECK(report.pass);

  const auto p = params(0.7, 0, {0.3, -0.2});
  report = cmlab::split_experiment(p, 1.0, 3, 128, 0.2);
  CHECK(report.bound == doctest::Approx(cmlab::norm_bound(p) + 0.2));
  const auto centered = cmlab::norm_check(CoupledSample(p, 3), {128}, 0.2);
  CHECK(report.b_norm_over_n == doctest::Approx(centered[0].norm_over_n).epsilon(1e-12));
}

TEST_CASE("beta tail") {
  for (double t : {0.0, 0.2, 0.7, 1.0}) CHECK(cmlab::beta_one_cdf(2, t) == doctest::Approx(t));
  CHECK(cmlab::beta_one_cdf(3, 0.5) == doctest::Approx(0.75));
  const auto ks = cmlab::beta_tail_test(8, 10000, 77);
  CHECK(ks.threshold == doctest::Approx(0.0163));
  CHECK(ks.pass);
  CHECK_ERRC(cmlab::beta_tail_test(8, 999, 1), cmlab::Errc::PreconditionViolation);
  CHECK_ERRC(cmlab::beta_tail_test(1, 1000, 1), cmlab::Errc::PreconditionViolation);
  CHECK(cmlab::ks_statistic({0.5}, [](double t) { return t; }) == doctest::Approx(0.5));
}

TEST_CASE("estimate_params") {
  auto est = cmlab::estimate_params(CoupledSample(params(5, 0, {}), 1), 16, 0.5);
  CHECK(std::abs(est.gamma1 - 5.0) <= 1e-12);
  CHECK(std::abs(est.gamma2) <= 1e-12);
  CHECK(est.points.empty());

  est = cmlab::estimate_params(CoupledSample(params(0, 0, {2.0, -1.0}), 1), 512, 0.5);
  REQUIRE(est.points.size() == 2);
  CHECK(std::abs(est.points[0] - 2.0) <= 0.15);
  CHECK(std::abs(est.points[1] + 1.0) <= 0.15);

  est = cmlab::estimate_params(CoupledSample(params(0, 1, {}), 11), 512, 0.5);
  CHECK(est.points.empty());
  CHECK(std::abs(est.gamma2 - 1.0) <= 0.2);

  CHECK_ERRC(cmlab::estimate_params(CoupledSample(params(0, 1, {}), 11), 3, 0.5),
             cmlab::Errc::DimensionTooSmall);
}
