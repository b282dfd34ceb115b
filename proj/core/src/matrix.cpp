#include "cmlab/matrix.hpp"

#include "cmlab/error.hpp"

namespace cmlab {

HermitianMinor::HermitianMinor(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw Error(Errc::PreconditionViolation, "Hermitian minor must be square and nonempty");
  }
  for (Eigen::Index j = 0; j < m_.rows(); ++j) {
    if (m_(j, j).imag() != 0.0) {
      throw Error(Errc::PreconditionViolation, "diagonal entries must be real");
    }
    for (Eigen::Index k = j + 1; k < m_.cols(); ++k) {
      if (m_(k, j) != std::conj(m_(j, k))) {
        throw Error(Errc::PreconditionViolation, "matrix is not Hermitian");
      }
    }
  }
}

HermitianMinor HermitianMinor::from_upper(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(Errc::PreconditionViolation, "Hermitian minor must be square and nonempty");
  }
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    out(j, j) = complex(m(j, j).real(), 0.0);
    for (Eigen::Index k = j + 1; k < m.cols(); ++k) {
      out(j, k) = m(j, k);
      out(k, j) = std::conj(m(j, k));
    }
  }
  return HermitianMinor(std::move(out), Trusted{});
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

UnitaryMinor::UnitaryMinor(Matrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) {
    throw Error(Errc::PreconditionViolation, "unitary minor must be square and nonempty");
  }
  const double defect = unitarity_defect(u_);
  if (!(defect <= 1e-10 * static_cast<double>(u_.rows()))) {
    throw Error(Errc::NumericalSingularity,
                "unitarity defect " + std::to_string(defect) + " exceeds 1e-10 n");
  }
}

}  // namespace cmlab
