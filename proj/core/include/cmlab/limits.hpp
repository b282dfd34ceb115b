#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cmlab/measure.hpp"
#include "cmlab/sampler.hpp"
#include "cmlab/spectral.hpp"

namespace cmlab {

using IndexPair = std::pair<Eigen::Index, Eigen::Index>;

/// Limit objects of the spectral measures for one realized sample.
struct LimitPack {
  AtomicMeasure lambda_inf;
  std::map<IndexPair, AtomicMeasure> sigma_inf;
  double norm_bound = 0.0;
  std::map<std::pair<Eigen::Index, Side>, std::size_t> ell_of_r;  // 1-based l
};

/// Lambda_inf = sum_l delta_{x_l}; repeated points merge into integer weights.
AtomicMeasure lambda_limit(const ErgodicParams& params);

/// Sigma_inf,a,b = sum_l xi_a^(l) conj(xi_b^(l)) delta_{x_l} (a, b 1-based).
AtomicMeasure sigma_limit(const CoupledSample& sample, Eigen::Index a, Eigen::Index b);

/// 1-based index of the single r-th largest (or smallest) point, counted with
/// multiplicity. Throws NoSuchPoint if it is missing or has the wrong sign,
/// NotUnique if another point has the same value.
std::size_t ell_of_r(const ErgodicParams& params, Eigen::Index r, Side side);

/// xi_a^(l(r)) |xi_1^(l(r))| / xi_1^(l(r)) for each requested (1-based) a.
std::vector<complex> eigvec_limit(const CoupledSample& sample, Eigen::Index r, Side side,
                                  const std::vector<Eigen::Index>& coords);

/// (sum x_l^2 + tail_bound)^(1/2).
double norm_bound(const ErgodicParams& params);

LimitPack build_limit_pack(const CoupledSample& sample, const std::vector<IndexPair>& pairs);

}  // namespace cmlab
