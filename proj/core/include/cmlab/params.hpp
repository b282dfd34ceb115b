#pragma once

#include <optional>
#include <span>
#include <vector>

namespace cmlab {

/// Unvalidated parameter record, as read from a config file.
struct RawParams {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  std::vector<double> points;
  std::optional<double> tail_bound;
};

/// The point (gamma1, gamma2, {x_l}) indexing an ergodic central measure.
///
/// Points are kept with multiplicity, ordered by decreasing |x|, positive
/// before negative on ties. An infinite sequence is represented by a finite
/// truncation plus `tail_bound`, an upper bound on the squared sum of the
/// discarded points.
class ErgodicParams {
 public:
  /// Canonicalizes `raw`. Throws NegativeGaussianComponent, ZeroPoint or
  /// NonFinite.
  static ErgodicParams validate(const RawParams& raw);

  double gamma1() const noexcept { return gamma1_; }
  double gamma2() const noexcept { return gamma2_; }
  std::span<const double> points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  double tail_bound() const noexcept { return tail_bound_; }
  /// Sum of x_l^2 over the stored points (tail excluded).
  double sum_squares() const noexcept { return sum_squares_; }
  /// Sum of x_l over the stored points; the diagonal compensator.
  double sum_points() const noexcept { return sum_points_; }

  RawParams raw() const;

  friend bool operator==(const ErgodicParams&, const ErgodicParams&) = default;

 private:
  ErgodicParams() = default;

  double gamma1_ = 0.0;
  double gamma2_ = 0.0;
  std::vector<double> points_;
  double tail_bound_ = 0.0;
  double sum_squares_ = 0.0;
  double sum_points_ = 0.0;
};

struct PowerTail {
  std::vector<double> points;
  double tail_bound = 0.0;
};

/// x_l = c / l^exponent for l <= L, with L the smallest length whose integral
/// tail bound c^2 L^(1-2 exponent) / (2 exponent - 1) is at most `tol`.
/// Throws DivergentTail when 2 exponent <= 1.
PowerTail truncate_power_tail(double c, double exponent, double tol);

/// Appends a truncated tail to explicit points and validates the result.
ErgodicParams with_power_tail(RawParams raw, double c, double exponent, double tol);

}  // namespace cmlab
