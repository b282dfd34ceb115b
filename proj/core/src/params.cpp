#include "cmlab/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmlab/error.hpp"

namespace cmlab {
namespace {

constexpr double kMaxTailLength = 1e7;

bool canonical_before(double a, double b) {
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  if (abs_a != abs_b) return abs_a > abs_b;
  return a > 0.0 && b < 0.0;
}

double integral_tail(double c, double exponent, double length) {
  const double slope = 2.0 * exponent - 1.0;
  return c * c * std::pow(length, -slope) / slope;
}

}  // namespace

ErgodicParams ErgodicParams::validate(const RawParams& raw) {
  if (!std::isfinite(raw.gamma1) || !std::isfinite(raw.gamma2)) {
    throw Error(Errc::NonFinite, "gamma1 and gamma2 must be finite");
  }
  if (raw.gamma2 < 0.0) {
    throw Error(Errc::NegativeGaussianComponent,
                "gamma2 = " + std::to_string(raw.gamma2) + " is negative");
  }
  const double tail = raw.tail_bound.value_or(0.0);
  if (!std::isfinite(tail)) throw Error(Errc::NonFinite, "tail_bound must be finite");
  if (tail < 0.0) throw Error(Errc::PreconditionViolation, "tail_bound must be nonnegative");

  for (std::size_t i = 0; i < raw.points.size(); ++i) {
    const double x = raw.points[i];
    if (!std::isfinite(x)) {
      throw Error(Errc::NonFinite, "point #" + std::to_string(i) + " is not finite");
    }
    if (x == 0.0) throw Error(Errc::ZeroPoint, "point #" + std::to_string(i) + " is zero");
  }

  ErgodicParams out;
  out.gamma1_ = raw.gamma1;
  out.gamma2_ = raw.gamma2;
  out.tail_bound_ = tail;
  out.points_ = raw.points;
  std::stable_sort(out.points_.begin(), out.points_.end(), canonical_before);
  // Summed smallest-first so the value only depends on the multiset.
  for (auto it = out.points_.rbegin(); it != out.points_.rend(); ++it) {
    out.sum_squares_ += *it * *it;
    out.sum_points_ += *it;
  }
  if (!std::isfinite(out.sum_squares_)) {
    throw Error(Errc::NonFinite, "sum of squared points overflows");
  }
  return out;
}

RawParams ErgodicParams::raw() const {
  return RawParams{gamma1_, gamma2_, points_, tail_bound_};
}

PowerTail truncate_power_tail(double c, double exponent, double tol) {
  if (!std::isfinite(c) || !std::isfinite(exponent) || !std::isfinite(tol)) {
    throw Error(Errc::NonFinite, "power tail parameters must be finite");
  }
  if (2.0 * exponent <= 1.0) {
    throw Error(Errc::DivergentTail, "2 * exponent must exceed 1");
  }
  if (tol <= 0.0) throw Error(Errc::PreconditionViolation, "tol must be positive");
  if (c == 0.0) return {};

  const double slope = 2.0 * exponent - 1.0;
  double guess = std::ceil(std::pow(c * c / (slope * tol), 1.0 / slope));
  if (!(guess <= kMaxTailLength)) {
    throw Error(Errc::PreconditionViolation, "truncation length exceeds 1e7 points");
  }
  auto length = static_cast<long>(std::max(1.0, guess));
  while (length > 1 && integral_tail(c, exponent, static_cast<double>(length - 1)) <= tol) {
    --length;
  }
  while (integral_tail(c, exponent, static_cast<double>(length)) > tol) ++length;

  PowerTail out;
  out.points.reserve(static_cast<std::size_t>(length));
  for (long l = 1; l <= length; ++l) {
    out.points.push_back(c / std::pow(static_cast<double>(l), exponent));
  }
  out.tail_bound = integral_tail(c, exponent, static_cast<double>(length));
  return out;
}

ErgodicParams with_power_tail(RawParams raw, double c, double exponent, double tol) {
  auto tail = truncate_power_tail(c, exponent, tol);
  raw.points.insert(raw.points.end(), tail.points.begin(), tail.points.end());
  raw.tail_bound = raw.tail_bound.value_or(0.0) + tail.tail_bound;
  return ErgodicParams::validate(raw);
}

}  // namespace cmlab
