#include "cmlab/sampler.hpp"

#include <cmath>
#include <string>

#include "cmlab/error.hpp"
#include "cmlab/rng.hpp"

namespace cmlab {
namespace {

bool selected(const MinorParts& parts, double x) {
  switch (parts.points) {
    case MinorParts::Points::All: return true;
    case MinorParts::Points::AtMost: return std::abs(x) <= parts.epsilon;
    case MinorParts::Points::Above: return std::abs(x) > parts.epsilon;
  }
  return false;
}

}  // namespace

CoupledSample::CoupledSample(ErgodicParams params, std::uint64_t seed)
    : params_(std::move(params)), seed_(seed) {}

CoupledSample CoupledSample::with_fields(ErgodicParams params,
                                         std::vector<std::vector<complex>> xi,
                                         std::optional<Matrix> gaussian, std::uint64_t seed) {
  CoupledSample out(std::move(params), seed);
  out.injected_xi_ = std::move(xi);
  if (gaussian) {
    for (Eigen::Index j = 0; j < gaussian->rows(); ++j) {
      if ((*gaussian)(j, j).imag() != 0.0) {
        throw Error(Errc::PreconditionViolation, "injected G must have a real diagonal");
      }
    }
  }
  out.injected_gaussian_ = std::move(gaussian);
  return out;
}

complex CoupledSample::gaussian(std::uint32_t j, std::uint32_t k) const {
  if (j == 0 || k == 0) throw Error(Errc::IndexOutOfRange, "field indices are 1-based");
  if (j > k) return std::conj(gaussian(k, j));
  if (injected_gaussian_ && j <= injected_gaussian_->rows() && k <= injected_gaussian_->cols()) {
    return (*injected_gaussian_)(j - 1, k - 1);
  }
  if (j == k) {
    return {rng::normal_pair(seed_, rng::Field::GaussianDiagonal, j, 0)[0], 0.0};
  }
  return rng::complex_gaussian(seed_, rng::Field::GaussianOffDiagonal, j, k);
}

complex CoupledSample::xi(std::uint32_t l, std::uint32_t j) const {
  if (l == 0 || j == 0) throw Error(Errc::IndexOutOfRange, "field indices are 1-based");
  if (l <= injected_xi_.size() && j <= injected_xi_[l - 1].size()) {
    return injected_xi_[l - 1][j - 1];
  }
  return rng::complex_gaussian(seed_, rng::Field::Xi, l, j);
}

Vector xi_vector(const CoupledSample& sample, std::size_t l, Eigen::Index n) {
  const std::size_t p = sample.params().point_count();
  if (l < 1 || l > p) {
    throw Error(Errc::IndexOutOfRange,
                "point index " + std::to_string(l) + " outside 1.." + std::to_string(p));
  }
  Vector out(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out(j) = sample.xi(static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(j + 1));
  }
  return out;
}

Matrix xi_block(const CoupledSample& sample, Eigen::Index n) {
  const auto p = static_cast<Eigen::Index>(sample.params().point_count());
  Matrix out(n, p);
  for (Eigen::Index l = 0; l < p; ++l) out.col(l) = xi_vector(sample, l + 1, n);
  return out;
}

HermitianMinor minor(const CoupledSample& sample, Eigen::Index n, const MinorParts& parts) {
  if (n < 1) throw Error(Errc::PreconditionViolation, "minor dimension must be >= 1");
  const auto& params = sample.params();
  const auto points = params.points();

  std::vector<Eigen::Index> active;
  double compensator = 0.0;
  for (std::size_t l = points.size(); l-- > 0;) {
    if (!selected(parts, points[l])) continue;
    active.push_back(static_cast<Eigen::Index>(l));
    compensator += points[l];
  }
  const Matrix xis = xi_block(sample, n);

  const double diagonal_shift = (parts.drift ? params.gamma1() : 0.0) - compensator;
  const double gaussian_scale =
      parts.gaussian && params.gamma2() > 0.0 ? std::sqrt(params.gamma2()) : 0.0;

  // Each entry is a fixed-order sum over points, so it does not depend on n.
  Matrix upper(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j <= k; ++j) {
      complex value = 0.0;
      for (const Eigen::Index l : active) {
        value += points[static_cast<std::size_t>(l)] * (xis(j, l) * std::conj(xis(k, l)));
      }
      if (gaussian_scale > 0.0) {
        value += gaussian_scale * sample.gaussian(static_cast<std::uint32_t>(j + 1),
                                                  static_cast<std::uint32_t>(k + 1));
      }
      if (j == k) value += diagonal_shift;
      upper(j, k) = value;
    }
  }
  return HermitianMinor::from_upper(upper);
}

std::vector<double> haar_column_entry_samples(Eigen::Index n, std::size_t count,
                                              std::uint64_t seed) {
  if (n < 2) throw Error(Errc::PreconditionViolation, "Haar column sampling needs n >= 2");
  if (count < 1) throw Error(Errc::PreconditionViolation, "count must be >= 1");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t draw = 0; draw < count; ++draw) {
    double first = 0.0;
    double total = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double mass = std::norm(rng::complex_gaussian(
          seed, rng::Field::Haar, static_cast<std::uint32_t>(draw), static_cast<std::uint32_t>(j)));
      if (j == 0) first = mass;
      total += mass;
    }
    out.push_back(first / total);
  }
  return out;
}

}  // namespace cmlab
