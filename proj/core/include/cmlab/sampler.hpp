#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cmlab/matrix.hpp"
#include "cmlab/params.hpp"

namespace cmlab {

/// One realization of the Gaussian fields (G_{j,k}) and (xi_j^{(l)}) behind an
/// ergodic central measure, shared by every minor dimension.
///
/// Field values are pure functions of (seed, field, indices), so minors of
/// different sizes are nested exactly and may be built in any order or
/// concurrently. Indices here are 1-based, as in the matrix model.
class CoupledSample {
 public:
  CoupledSample(ErgodicParams params, std::uint64_t seed);

  /// Test hook: explicit field values. `xi[l-1][j-1]` overrides xi_j^{(l)};
  /// the upper triangle of `gaussian` overrides G_{j,k}. Entries not given
  /// fall back to the seeded fields.
  static CoupledSample with_fields(ErgodicParams params, std::vector<std::vector<complex>> xi,
                                   std::optional<Matrix> gaussian = std::nullopt,
                                   std::uint64_t seed = 0);

  const ErgodicParams& params() const noexcept { return params_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// G_{j,k}; real on the diagonal, G_{k,j} = conj(G_{j,k}).
  complex gaussian(std::uint32_t j, std::uint32_t k) const;
  /// xi_j^{(l)} for any l, j >= 1 (l may exceed the stored point count).
  complex xi(std::uint32_t l, std::uint32_t j) const;

 private:
  ErgodicParams params_;
  std::uint64_t seed_;
  std::vector<std::vector<complex>> injected_xi_;
  std::optional<Matrix> injected_gaussian_;
};

/// (xi_1^{(l)}, ..., xi_n^{(l)}). Throws IndexOutOfRange unless
/// 1 <= l <= point count.
Vector xi_vector(const CoupledSample& sample, std::size_t l, Eigen::Index n);

/// n x p matrix whose l-th column is xi_vector(sample, l, n).
Matrix xi_block(const CoupledSample& sample, Eigen::Index n);

/// Which terms of the matrix model enter an assembled minor.
struct MinorParts {
  enum class Points { All, AtMost, Above };

  bool drift = true;     // gamma1 on the diagonal
  bool gaussian = true;  // sqrt(gamma2) G
  Points points = Points::All;
  double epsilon = 0.0;  // threshold on |x_l| for AtMost / Above
};

/// m_{j,k} = gamma1 d_{jk} + sqrt(gamma2) G_{jk} + sum_l x_l (xi_j conj(xi_k) - d_{jk}),
/// restricted to the selected parts. The compensator enters as one
/// diagonal shift -(sum of selected x_l).
HermitianMinor minor(const CoupledSample& sample, Eigen::Index n, const MinorParts& parts = {});

/// `count` draws of |u_{1,1}|^2 for Haar U in U(n), i.e. Beta(1, n-1).
std::vector<double> haar_column_entry_samples(Eigen::Index n, std::size_t count,
                                              std::uint64_t seed);

}  // namespace cmlab
