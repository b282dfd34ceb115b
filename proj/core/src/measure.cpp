#include "cmlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cmlab/error.hpp"
#include "cmlab/format.hpp"

namespace cmlab {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, WeightKind kind, double merge_tolerance)
    : kind_(kind) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.location < b.location; });
  for (const Atom& atom : atoms) {
    if (!std::isfinite(atom.location)) {
      throw Error(Errc::NonFinite, "atom locations must be finite");
    }
    if (kind == WeightKind::Counting &&
        (std::abs(atom.weight.imag()) > 1e-12 || atom.weight.real() < -1e-12)) {
      throw Error(Errc::PreconditionViolation, "counting weights must be real and nonnegative");
    }
    if (!atoms_.empty() && atom.location - atoms_.back().location <= merge_tolerance) {
      atoms_.back().weight += atom.weight;
    } else {
      atoms_.push_back(atom);
    }
  }
}

std::complex<double> AtomicMeasure::total_mass() const {
  std::complex<double> total = 0.0;
  for (const Atom& atom : atoms_) total += atom.weight;
  return total;
}

bool Interval::contains(double x) const noexcept {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::complex<double> measure_sum(const AtomicMeasure& m, const Interval& interval) {
  std::complex<double> total = 0.0;
  for (const Atom& atom : m.atoms()) {
    if (interval.contains(atom.location)) total += atom.weight;
  }
  return total;
}

std::complex<double> measure_query(const AtomicMeasure& m, const Interval& interval,
                                   double clearance, bool exclude_zero) {
  if (std::isnan(interval.lo) || std::isnan(interval.hi) || interval.lo > interval.hi) {
    throw Error(Errc::PreconditionViolation, "interval endpoints must be ordered");
  }
  const auto too_close = [&](double point) {
    for (const double endpoint : {interval.lo, interval.hi}) {
      if (std::isfinite(endpoint) && std::abs(point - endpoint) <= clearance) return true;
    }
    return false;
  };
  if (exclude_zero && too_close(0.0)) {
    throw Error(Errc::BoundaryTooClose, "interval endpoint within clearance of 0");
  }
  for (const Atom& atom : m.atoms()) {
    if (too_close(atom.location)) {
      throw Error(Errc::BoundaryTooClose,
                  "interval endpoint within clearance of atom at " + format_double(atom.location));
    }
  }
  return measure_sum(m, interval);
}

void write_measure_csv(std::ostream& os, const AtomicMeasure& m) {
  os << "location,weight_re,weight_im\n";
  for (const Atom& atom : m.atoms()) {
    os << format_double(atom.location) << ',' << format_double(atom.weight.real()) << ','
       << format_double(atom.weight.imag()) << '\n';
  }
}

}  // namespace cmlab
