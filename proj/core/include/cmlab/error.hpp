#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmlab {

enum class Errc {
  NegativeGaussianComponent,
  ZeroPoint,
  NonFinite,
  DivergentTail,
  IndexOutOfRange,
  ConvergenceFailure,
  BoundaryTooClose,
  DegenerateEigenvalue,
  NoPhaseAnchor,
  GaussianPartPresent,
  NoSuchPoint,
  NotUnique,
  DimensionTooSmall,
  NumericalSingularity,
  UnitEigenvalue,
  PreconditionViolation,
  ConfigInvalid,
  IoFailure,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cmlab
