#include <cmath>

#include "cmlab/sampler.hpp"
#include "support.hpp"

using cmlab::complex;
using cmlab::CoupledSample;
using cmlab::ErgodicParams;
using cmlab::Matrix;

namespace {

ErgodicParams params(double g1, double g2, std::vector<double> points) {
  return ErgodicParams::validate({g1, g2, std::move(points), {}});
}

struct Moments {
  double mean = 0.0, var = 0.0;
  double se() const { return std::sqrt(var / 10000.0); }
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  for (double x : xs) m.var += (x - m.mean) * (x - m.mean);
  m.var /= static_cast<double>(xs.size() - 1);
  return m;
}

}  // namespace

TEST_CASE("samples are deterministic in (params, seed)") {
  const auto p = params(0.5, 1.0, {2.0, -1.0});
  const CoupledSample a(p, 11), b(p, 11), c(p, 12);
  CHECK(a.gaussian(3, 7) == b.gaussian(3, 7));
  CHECK(a.xi(1, 2) == b.xi(1, 2));
  int differing = 0;
  for (std::uint32_t j = 1; j <= 10; ++j) {
    for (std::uint32_t k = 1; k <= 10; ++k) differing += a.gaussian(j, k) != c.gaussian(j, k);
  }
  CHECK(differing == 100);
  CHECK(cmlab::minor(a, 20) == cmlab::minor(b, 20));
}

TEST_CASE("minor without random terms is a multiple of the identity") {
  const CoupledSample s(params(5.0, 0.0, {}), 3);
  for (Eigen::Index n : {1, 3, 10}) {
    CHECK(cmlab::minor(s, n).matrix() == Matrix::Identity(n, n) * 5.0);
  }
}

TEST_CASE("minor hand example with injected xi") {
  const auto s = CoupledSample::with_fields(params(0.0, 0.0, {2.0}), {{1.0, 1.0}});
  Matrix expected(2, 2);
  expected << 0.0, 2.0, 2.0, 0.0;
  CHECK(cmlab::minor(s, 2).matrix() == expected);
}

TEST_CASE("minor matches the entry formula") {
  const auto p = params(0.3, 2.0, {1.5, -0.5, 0.25});
  const CoupledSample s(p, 77);
  const auto m = cmlab::minor(s, 6).matrix();
  for (std::uint32_t j = 1; j <= 6; ++j) {
    for (std::uint32_t k = 1; k <= 6; ++k) {
      complex expected = std::sqrt(2.0) * s.gaussian(j, k);
      for (std::uint32_t l = 1; l <= 3; ++l) {
        expected += p.points()[l - 1] * (s.xi(l, j) * std::conj(s.xi(l, k)) - (j == k ? 1.0 : 0.0));
      }
      if (j == k) expected += 0.3;
      CHECK(std::abs(m(j - 1, k - 1) - expected) < 1e-12);
    }
  }
}

TEST_CASE("minors nest exactly and do not depend on query order") {
  const auto p = params(0.1, 1.0, {3.0, -2.0, 1.0});
  const CoupledSample s(p, 2024);
  const auto big_first = cmlab::minor(s, 100);
  const auto small = cmlab::minor(s, 10);
  const CoupledSample fresh(p, 2024);
  const auto small_first = cmlab::minor(fresh, 10);
  CHECK(cmlab::minor(fresh, 100) == big_first);
  CHECK(small == small_first);
  for (Eigen::Index n = 1; n < 30; ++n) {
    const auto next = cmlab::minor(s, n + 1).matrix();
    CHECK(Matrix(next.topLeftCorner(n, n)) == cmlab::minor(s, n).matrix());
  }
  CHECK(Matrix(big_first.matrix().topLeftCorner(10, 10)) == small.matrix());
}

TEST_CASE("minors are exactly Hermitian") {
  const CoupledSample s(params(-1.0, 0.7, {2.0, -1.0, 0.5}), 5);
  const auto m = cmlab::minor(s, 40).matrix();
  CHECK(m == Matrix(m.adjoint()));
  for (Eigen::Index j = 0; j < 40; ++j) CHECK(m(j, j).imag() == 0.0);
  CHECK(s.gaussian(4, 2) == std::conj(s.gaussian(2, 4)));
  CHECK(s.gaussian(3, 3).imag() == 0.0);
}

TEST_CASE("xi_vector is prefix consistent and bounds checked") {
  const CoupledSample s(params(0.0, 0.0, {2.0, 1.0}), 9);
  const auto v5 = cmlab::xi_vector(s, 1, 5);
  CHECK(cmlab::Vector(v5.head(3)) == cmlab::xi_vector(s, 1, 3));
  CHECK(cmlab::xi_block(s, 5).col(1) == cmlab::xi_vector(s, 2, 5));
  CHECK_ERRC(cmlab::xi_vector(s, 3, 5), cmlab::Errc::IndexOutOfRange);
  CHECK_ERRC(cmlab::xi_vector(s, 0, 5), cmlab::Errc::IndexOutOfRange);
}

TEST_CASE("field moments at desk scale") {
  const CoupledSample s(params(0.0, 1.0, {1.0}), 31337);
  std::vector<double> diag, off_re, off_im, xi_norm, xi_re_sq, xi_sq_re;
  for (std::uint32_t i = 1; i <= 10000; ++i) {
    diag.push_back(s.gaussian(i, i).real());
    const complex g = s.gaussian(i, i + 1 + i % 7);
    off_re.push_back(g.real());
    off_im.push_back(g.imag());
    const complex x = s.xi(1, i);
    xi_sq_re.push_back((x * x).real());
  }
  for (std::uint32_t d = 0; d < 10000; ++d) {
    double norm2 = 0.0;
    for (std::uint32_t j = 1; j <= 16; ++j) norm2 += std::norm(s.xi(d + 2, j));
    xi_norm.push_back(norm2 / 16.0);
  }
  const auto md = moments(diag), mr = moments(off_re), mi = moments(off_im);
  CHECK(std::abs(md.mean) <= 4 * md.se());
  CHECK(std::abs(mr.mean) <= 4 * mr.se());
  CHECK(std::abs(mi.mean) <= 4 * mi.se());
  // Var of a sample variance of N(0, s2) is 2 s2^2 / N.
  CHECK(std::abs(md.var - 1.0) <= 4 * std::sqrt(2.0 / 10000));
  CHECK(std::abs(mr.var - 0.5) <= 4 * std::sqrt(2.0 * 0.25 / 10000));
  CHECK(std::abs(mi.var - 0.5) <= 4 * std::sqrt(2.0 * 0.25 / 10000));
  // ||xi||^2 / n has mean 1 and variance 1/n.
  const auto mx = moments(xi_norm);
  CHECK(std::abs(mx.mean - 1.0) <= 3 * std::sqrt(1.0 / 16 / 10000));
  // E xi^2 = 0; Re(xi^2) has variance 1/2.
  const auto ms = moments(xi_sq_re);
  CHECK(std::abs(ms.mean) <= 4 * ms.se());
}

TEST_CASE("haar column entries") {
  SUBCASE("n = 2 is uniform") {
    const auto draws = cmlab::haar_column_entry_samples(2, 10000, 4);
    const auto m = moments(draws);
    CHECK(std::abs(m.mean - 0.5) <= 3 * m.se());
    for (double d : draws) CHECK((d >= 0.0 && d <= 1.0));
  }
  SUBCASE("n = 3 tail") {
    const auto draws = cmlab::haar_column_entry_samples(3, 10000, 5);
    double above = 0.0;
    for (double d : draws) above += d >= 0.5;
    above /= 10000.0;
    CHECK(std::abs(above - 0.25) <= 3 * std::sqrt(0.25 * 0.75 / 10000));
  }
  SUBCASE("preconditions") {
    CHECK_ERRC(cmlab::haar_column_entry_samples(2, 0, 1), cmlab::Errc::PreconditionViolation);
    CHECK_ERRC(cmlab::haar_column_entry_samples(1, 10, 1), cmlab::Errc::PreconditionViolation);
  }
}
