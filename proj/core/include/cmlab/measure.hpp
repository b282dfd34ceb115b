#pragma once

#include <complex>
#include <iosfwd>
#include <limits>
#include <vector>

namespace cmlab {

struct Atom {
  double location = 0.0;
  std::complex<double> weight;
};

enum class WeightKind { Counting, Projection };

/// Finitely many atoms with strictly increasing locations.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  /// Sorts `atoms` and merges those whose locations differ by at most
  /// `merge_tolerance` (weights add; the merged location is the first one).
  /// Counting measures must carry real nonnegative weights (to 1e-12).
  AtomicMeasure(std::vector<Atom> atoms, WeightKind kind, double merge_tolerance = 0.0);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  WeightKind kind() const noexcept { return kind_; }
  bool empty() const noexcept { return atoms_.empty(); }
  std::complex<double> total_mass() const;

 private:
  std::vector<Atom> atoms_;
  WeightKind kind_ = WeightKind::Counting;
};

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double x) const noexcept;
};

/// Sum of the weights of atoms inside `interval`, with no well-posedness check.
std::complex<double> measure_sum(const AtomicMeasure& m, const Interval& interval);

/// Interval query that refuses ill-posed boundaries: throws BoundaryTooClose
/// if an atom (or 0, when `exclude_zero`) lies within `clearance` of a finite
/// endpoint.
std::complex<double> measure_query(const AtomicMeasure& m, const Interval& interval,
                                   double clearance, bool exclude_zero);

/// CSV with header location,weight_re,weight_im.
void write_measure_csv(std::ostream& os, const AtomicMeasure& m);

}  // namespace cmlab
