#include "cmlab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "cmlab/error.hpp"
#include "cmlab/format.hpp"
#include "cmlab/log.hpp"

namespace cmlab {

const EigenGroup& EigenDecomposition::group_of(Eigen::Index index) const {
  const auto it = std::upper_bound(groups.begin(), groups.end(), index,
                                   [](Eigen::Index i, const EigenGroup& g) { return i < g.begin; });
  if (it == groups.begin() || index < 0 || index >= n) {
    throw Error(Errc::IndexOutOfRange, "eigenvalue index out of range");
  }
  return *std::prev(it);
}

std::vector<EigenGroup> group_eigenvalues(const RealVector& eigenvalues, double tau_mult) {
  std::vector<EigenGroup> groups;
  const Eigen::Index n = eigenvalues.size();
  if (n == 0) return groups;
  const double threshold = tau_mult * (eigenvalues(n - 1) - eigenvalues(0));
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || eigenvalues(i) - eigenvalues(i - 1) > threshold) {
      const Eigen::Index size = i - begin;
      groups.push_back({begin, size, eigenvalues.segment(begin, size).mean()});
      begin = i;
    }
  }
  return groups;
}

EigenDecomposition eig_hermitian(const HermitianMinor& m, const EigOptions& options) {
  const Matrix& a = m.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  EigenDecomposition dec;
  dec.n = m.n();
  dec.eigenvalues = solver.eigenvalues();
  dec.vectors = solver.eigenvectors();
  dec.residual = (a * dec.vectors - dec.vectors * dec.eigenvalues.asDiagonal()).norm();
  dec.orthogonality = (dec.vectors.adjoint() * dec.vectors - Matrix::Identity(dec.n, dec.n)).norm();

  const double scale = std::max(1.0, a.norm());
  log_line(2, "eig_hermitian n=" + std::to_string(dec.n) + " residual=" +
                  format_double(dec.residual / scale) +
                  " orthogonality=" + format_double(dec.orthogonality));
  if (!(dec.residual <= options.tol_resid * scale) ||
      !(dec.orthogonality <= options.tol_orth)) {
    throw Error(Errc::ConvergenceFailure,
                "eigendecomposition residual " + format_double(dec.residual / scale) +
                    " / orthogonality " + format_double(dec.orthogonality) + " out of bounds");
  }
  dec.groups = group_eigenvalues(dec.eigenvalues, options.tau_mult);
  return dec;
}

RealVector hermitian_eigenvalues(const HermitianMinor& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues();
}

AtomicMeasure lambda_measure(const EigenDecomposition& dec) {
  std::vector<Atom> atoms;
  atoms.reserve(dec.groups.size());
  const auto n = static_cast<double>(dec.n);
  for (const EigenGroup& g : dec.groups) {
    atoms.push_back({g.mean / n, static_cast<double>(g.size)});
  }
  return AtomicMeasure(std::move(atoms), WeightKind::Counting);
}

AtomicMeasure sigma_measure(const EigenDecomposition& dec, Eigen::Index a, Eigen::Index b) {
  if (a < 1 || b < 1 || a > dec.n || b > dec.n) {
    throw Error(Errc::IndexOutOfRange, "sigma_measure indices must lie in 1..n");
  }
  const auto n = static_cast<double>(dec.n);
  std::vector<Atom> atoms;
  atoms.reserve(dec.groups.size());
  for (const EigenGroup& g : dec.groups) {
    complex entry = 0.0;
    for (Eigen::Index j = g.begin; j < g.begin + g.size; ++j) {
      entry += a == b ? complex(std::norm(dec.vectors(a - 1, j)), 0.0)
                      : dec.vectors(a - 1, j) * std::conj(dec.vectors(b - 1, j));
    }
    atoms.push_back({g.mean / n, n * entry});
  }
  return AtomicMeasure(std::move(atoms), WeightKind::Projection);
}

Matrix group_projection(const EigenDecomposition& dec, const EigenGroup& group) {
  const auto block = dec.vectors.middleCols(group.begin, group.size);
  return block * block.adjoint();
}

Vector normalized_eigvec(const EigenDecomposition& dec, Eigen::Index r, Side side,
                         double tau_phase) {
  if (r < 1 || r > dec.n) throw Error(Errc::IndexOutOfRange, "rank r must lie in 1..n");
  const Eigen::Index index = side == Side::Largest ? dec.n - r : r - 1;
  if (dec.group_of(index).size != 1) {
    throw Error(Errc::DegenerateEigenvalue,
                "eigenvalue of rank " + std::to_string(r) + " is not simple");
  }
  Vector v = dec.vectors.col(index);
  v *= std::sqrt(static_cast<double>(dec.n)) / v.norm();
  // With ||v|| = sqrt(n) the anchor threshold tau_phase ||v|| / sqrt(n) is tau_phase.
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    const double modulus = std::abs(v(j));
    if (modulus > tau_phase) {
      v *= modulus / v(j);
      v(j) = modulus;
      return v;
    }
  }
  throw Error(Errc::NoPhaseAnchor, "no coordinate exceeds the phase threshold");
}

RealVector lowrank_spectrum(const CoupledSample& sample, Eigen::Index n) {
  const auto& params = sample.params();
  if (params.gamma2() != 0.0) {
    throw Error(Errc::GaussianPartPresent, "low-rank path requires gamma2 = 0");
  }
  if (n < 1) throw Error(Errc::PreconditionViolation, "dimension must be >= 1");
  const auto p = static_cast<Eigen::Index>(params.point_count());
  if (p == 0) return RealVector(0);

  const Matrix xis = xi_block(sample, n);
  const Matrix gram = xis.adjoint() * xis;  // (l, m) -> <xi^(l), xi^(m)>
  RealVector weights(p);
  for (Eigen::Index l = 0; l < p; ++l) weights(l) = params.points()[static_cast<std::size_t>(l)];
  const Matrix reduced = weights.cast<complex>().asDiagonal() * gram;

  Eigen::ComplexEigenSolver<Matrix> solver(reduced, false);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::ConvergenceFailure, "reduced eigensolver did not converge");
  }
  const Vector& values = solver.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  RealVector out(p);
  for (Eigen::Index l = 0; l < p; ++l) {
    if (std::abs(values(l).imag()) > 1e-8 * scale) {
      throw Error(Errc::ConvergenceFailure, "reduced spectrum has a non-real eigenvalue");
    }
    out(l) = values(l).real();
  }
  std::sort(out.begin(), out.end());
  return out;
}

double centered_spectral_radius(const RealVector& eigenvalues, double center) {
  double radius = 0.0;
  for (const double value : eigenvalues) radius = std::max(radius, std::abs(value - center));
  return radius;
}

}  // namespace cmlab
