#pragma once

#include <Eigen/Dense>
#include <complex>

namespace cmlab {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// An n x n complex matrix that is exactly Hermitian: m(k, j) = conj(m(j, k))
/// bit for bit, real diagonal.
class HermitianMinor {
 public:
  /// Throws PreconditionViolation unless `m` is square and exactly Hermitian.
  explicit HermitianMinor(Matrix m);

  /// Builds from the upper triangle of `m` (diagonal imaginary parts dropped).
  static HermitianMinor from_upper(const Matrix& m);

  Eigen::Index n() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  complex operator()(Eigen::Index j, Eigen::Index k) const { return m_(j, k); }

  friend bool operator==(const HermitianMinor& a, const HermitianMinor& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  struct Trusted {};
  HermitianMinor(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

/// An n x n unitary matrix, ||U*U - I||_F <= 1e-10 n.
class UnitaryMinor {
 public:
  /// Throws NumericalSingularity if the unitarity invariant fails.
  explicit UnitaryMinor(Matrix u);

  Eigen::Index n() const noexcept { return u_.rows(); }
  const Matrix& matrix() const noexcept { return u_; }

 private:
  Matrix u_;
};

double unitarity_defect(const Matrix& u);

}  // namespace cmlab
