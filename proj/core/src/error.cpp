#include "cmlab/error.hpp"

namespace cmlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NegativeGaussianComponent: return "NegativeGaussianComponent";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::NonFinite: return "NonFinite";
    case Errc::DivergentTail: return "DivergentTail";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::BoundaryTooClose: return "BoundaryTooClose";
    case Errc::DegenerateEigenvalue: return "DegenerateEigenvalue";
    case Errc::NoPhaseAnchor: return "NoPhaseAnchor";
    case Errc::GaussianPartPresent: return "GaussianPartPresent";
    case Errc::NoSuchPoint: return "NoSuchPoint";
    case Errc::NotUnique: return "NotUnique";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::NumericalSingularity: return "NumericalSingularity";
    case Errc::UnitEigenvalue: return "UnitEigenvalue";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace cmlab
