#include "cmlab/cayley.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "cmlab/error.hpp"
#include "cmlab/format.hpp"

namespace cmlab {

UnitaryMinor cayley(const HermitianMinor& m) {
  const Matrix& a = m.matrix();
  const Eigen::Index n = m.n();
  const complex i(0.0, 1.0);
  const Matrix identity = Matrix::Identity(n, n);
  const Matrix plus = a + i * identity;
  const Matrix minus = a - i * identity;
  // The factors commute, so (M - iI)(M + iI)^{-1} = (M + iI)^{-1}(M - iI).
  const Matrix u = plus.partialPivLu().solve(minus);
  const double residual = (plus * u - minus).norm();
  if (!(residual <= 1e-8 * std::max(1.0, a.norm()))) {
    throw Error(Errc::NumericalSingularity, "Cayley solve residual " + format_double(residual));
  }
  return UnitaryMinor(u);
}

HermitianMinor inverse_cayley(const UnitaryMinor& u, double tol) {
  const Matrix& v = u.matrix();
  const Eigen::Index n = u.n();
  Eigen::ComplexEigenSolver<Matrix> solver(v, false);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::ConvergenceFailure, "unitary eigensolver did not converge");
  }
  const double gap = (solver.eigenvalues().array() - complex(1.0, 0.0)).abs().minCoeff();
  if (gap <= tol) {
    throw Error(Errc::UnitEigenvalue, "eigenvalue within " + format_double(gap) + " of 1");
  }
  const Matrix identity = Matrix::Identity(n, n);
  const Matrix h = complex(0.0, 1.0) * (identity - v).partialPivLu().solve(identity + v);
  return HermitianMinor::from_upper((h + h.adjoint()) / 2.0);
}

double cayley_angle(double lambda) noexcept {
  // arg((lambda - i)^2) = -2 atan2(1, lambda), which lies in (-2 pi, 0).
  const double theta = -2.0 * std::atan2(1.0, lambda);
  return theta <= -std::numbers::pi ? theta + 2.0 * std::numbers::pi : theta;
}

std::vector<EigenAngle> eigen_correspondence(const EigenDecomposition& dec) {
  std::vector<EigenAngle> out;
  out.reserve(static_cast<std::size_t>(dec.n));
  for (Eigen::Index j = 0; j < dec.n; ++j) out.push_back({cayley_angle(dec.eigenvalues(j)), j});
  return out;
}

double correspondence_defect(const UnitaryMinor& u, const EigenDecomposition& dec) {
  const Matrix image = u.matrix() * dec.vectors;
  double worst = 0.0;
  for (const EigenAngle& angle : eigen_correspondence(dec)) {
    const auto j = angle.index;
    worst = std::max(worst, (image.col(j) - std::polar(1.0, angle.theta) * dec.vectors.col(j)).norm());
  }
  return worst;
}

}  // namespace cmlab
