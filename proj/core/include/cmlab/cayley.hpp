#pragma once

#include <vector>

#include "cmlab/matrix.hpp"
#include "cmlab/spectral.hpp"

namespace cmlab {

/// (M - iI)(M + iI)^{-1}, computed by an LU solve against M + iI.
/// Throws NumericalSingularity if the solve residual exceeds 1e-8 max(1, ||M||_F).
UnitaryMinor cayley(const HermitianMinor& m);

/// i(I + U)(I - U)^{-1}. Throws UnitEigenvalue if some eigenvalue of U lies
/// within `tol` of 1.
HermitianMinor inverse_cayley(const UnitaryMinor& u, double tol = 1e-6);

/// Eigenangle of the Cayley image of a real eigenvalue, in (-pi, pi];
/// lambda = 0 maps to +pi. Equals -2 atan(1/lambda) for lambda > 0.
double cayley_angle(double lambda) noexcept;

struct EigenAngle {
  double theta = 0.0;
  Eigen::Index index = 0;  // column of the Hermitian eigenvector
};

std::vector<EigenAngle> eigen_correspondence(const EigenDecomposition& dec);

/// max over eigenpairs of ||U v - e^{i theta} v||.
double correspondence_defect(const UnitaryMinor& u, const EigenDecomposition& dec);

}  // namespace cmlab
