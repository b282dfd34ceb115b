#pragma once

#include <vector>

#include "cmlab/matrix.hpp"
#include "cmlab/measure.hpp"
#include "cmlab/sampler.hpp"

namespace cmlab {

/// A maximal run of eigenvalues treated as one eigenvalue with multiplicity.
struct EigenGroup {
  Eigen::Index begin = 0;
  Eigen::Index size = 0;
  double mean = 0.0;
};

struct EigenDecomposition {
  Eigen::Index n = 0;
  RealVector eigenvalues;  // ascending
  Matrix vectors;          // column j pairs with eigenvalues(j)
  std::vector<EigenGroup> groups;
  double residual = 0.0;       // ||M V - V diag(lambda)||_F
  double orthogonality = 0.0;  // ||V* V - I||_F

  const EigenGroup& group_of(Eigen::Index index) const;
};

struct EigOptions {
  double tol_resid = 1e-10;  // relative to max(1, ||M||_F)
  double tol_orth = 1e-9;
  double tau_mult = 1e-8;    // relative to the spectral diameter
};

/// Dense Hermitian eigendecomposition. Throws ConvergenceFailure when the
/// solver fails or the residual/orthogonality bounds are not met.
EigenDecomposition eig_hermitian(const HermitianMinor& m, const EigOptions& options = {});

/// Eigenvalues only, ascending.
RealVector hermitian_eigenvalues(const HermitianMinor& m);

/// Partition of ascending `eigenvalues` into runs with consecutive gaps at
/// most tau_mult * (max - min).
std::vector<EigenGroup> group_eigenvalues(const RealVector& eigenvalues, double tau_mult);

/// Lambda_n: unit mass per eigenvalue at lambda / n, grouped by multiplicity.
AtomicMeasure lambda_measure(const EigenDecomposition& dec);

/// Sigma_{n,a,b}: weight n (Pi_lambda)_{a,b} at lambda / n, with Pi_lambda the
/// projection on the group's eigenspace. a and b are 1-based.
AtomicMeasure sigma_measure(const EigenDecomposition& dec, Eigen::Index a, Eigen::Index b);

/// Orthogonal projection onto the eigenspace of `group`.
Matrix group_projection(const EigenDecomposition& dec, const EigenGroup& group);

enum class Side { Largest, Smallest };

/// Eigenvector of the r-th largest/smallest eigenvalue scaled to norm sqrt(n),
/// with its first coordinate of modulus above tau_phase rotated to the
/// positive real axis. Throws DegenerateEigenvalue or NoPhaseAnchor.
Vector normalized_eigvec(const EigenDecomposition& dec, Eigen::Index r, Side side,
                         double tau_phase = 1e-6);

/// Nonzero eigenvalues of sum_l x_l xi xi* on C^n through the p x p matrix
/// (x_l <xi^(l), xi^(m)>), at O(n p^2 + p^3). Ascending. The identity shift
/// gamma1 - sum x_l is not included. Throws GaussianPartPresent if gamma2 != 0.
RealVector lowrank_spectrum(const CoupledSample& sample, Eigen::Index n);

/// max |lambda - center| over the spectrum.
double centered_spectral_radius(const RealVector& eigenvalues, double center);

}  // namespace cmlab
