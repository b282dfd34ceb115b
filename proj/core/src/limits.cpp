#include "cmlab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmlab/error.hpp"

namespace cmlab {

AtomicMeasure lambda_limit(const ErgodicParams& params) {
  std::vector<Atom> atoms;
  for (const double x : params.points()) atoms.push_back({x, 1.0});
  return AtomicMeasure(std::move(atoms), WeightKind::Counting);
}

AtomicMeasure sigma_limit(const CoupledSample& sample, Eigen::Index a, Eigen::Index b) {
  if (a < 1 || b < 1) throw Error(Errc::IndexOutOfRange, "sigma_limit indices are 1-based");
  const auto points = sample.params().points();
  std::vector<Atom> atoms;
  for (std::size_t l = 0; l < points.size(); ++l) {
    const auto index = static_cast<std::uint32_t>(l + 1);
    const complex xi_a = sample.xi(index, static_cast<std::uint32_t>(a));
    const complex weight = a == b ? complex(std::norm(xi_a), 0.0)
                                  : xi_a * std::conj(sample.xi(index, static_cast<std::uint32_t>(b)));
    atoms.push_back({points[l], weight});
  }
  return AtomicMeasure(std::move(atoms), WeightKind::Projection);
}

std::size_t ell_of_r(const ErgodicParams& params, Eigen::Index r, Side side) {
  const auto points = params.points();
  if (r < 1 || static_cast<std::size_t>(r) > points.size()) {
    throw Error(Errc::NoSuchPoint, "fewer than " + std::to_string(r) + " points");
  }
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return side == Side::Largest ? points[i] > points[j] : points[i] < points[j];
  });
  const std::size_t chosen = order[static_cast<std::size_t>(r - 1)];
  const double value = points[chosen];
  if (side == Side::Largest ? value <= 0.0 : value >= 0.0) {
    throw Error(Errc::NoSuchPoint, "the rank-" + std::to_string(r) + " point has the wrong sign");
  }
  if (std::count(points.begin(), points.end(), value) > 1) {
    throw Error(Errc::NotUnique, "the rank-" + std::to_string(r) + " point is repeated");
  }
  return chosen + 1;
}

std::vector<complex> eigvec_limit(const CoupledSample& sample, Eigen::Index r, Side side,
                                  const std::vector<Eigen::Index>& coords) {
  const auto l = static_cast<std::uint32_t>(ell_of_r(sample.params(), r, side));
  const complex anchor = sample.xi(l, 1);
  const complex phase = std::abs(anchor) / anchor;
  std::vector<complex> out;
  out.reserve(coords.size());
  for (const Eigen::Index a : coords) {
    if (a < 1) throw Error(Errc::IndexOutOfRange, "coordinates are 1-based");
    out.push_back(a == 1 ? complex(std::abs(anchor), 0.0)
                         : sample.xi(l, static_cast<std::uint32_t>(a)) * phase);
  }
  return out;
}

double norm_bound(const ErgodicParams& params) {
  return std::sqrt(params.sum_squares() + params.tail_bound());
}

LimitPack build_limit_pack(const CoupledSample& sample, const std::vector<IndexPair>& pairs) {
  LimitPack pack;
  const auto& params = sample.params();
  pack.lambda_inf = lambda_limit(params);
  for (const auto& pair : pairs) {
    pack.sigma_inf.emplace(pair, sigma_limit(sample, pair.first, pair.second));
  }
  pack.norm_bound = norm_bound(params);
  const auto points = params.points();
  for (const Side side : {Side::Largest, Side::Smallest}) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return side == Side::Largest ? points[i] > points[j] : points[i] < points[j];
    });
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      const double value = points[order[rank]];
      if (side == Side::Largest ? value <= 0.0 : value >= 0.0) break;
      const bool tied = (rank > 0 && points[order[rank - 1]] == value) ||
                        (rank + 1 < order.size() && points[order[rank + 1]] == value);
      if (!tied) {
        pack.ell_of_r.emplace(std::pair{static_cast<Eigen::Index>(rank + 1), side},
                              order[rank] + 1);
      }
    }
  }
  return pack;
}

}  // namespace cmlab
