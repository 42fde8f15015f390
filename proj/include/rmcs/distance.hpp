#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmcs/dataset.hpp"
#include "rmcs/types.hpp"

namespace rmcs {

enum class DistanceKind { hamming, euclidean, minkowski };

struct DistanceSpec {
  DistanceKind kind = DistanceKind::euclidean;
  double p = 2.0;  // Minkowski order, only consulted when kind == minkowski
};

void validate(const DistanceSpec& spec);

// "hamming", "euclidean", or "minkowski:P".
DistanceSpec parse_distance(const std::string& text);
std::string to_string(const DistanceSpec& spec);

// Distance between two feature rows. Accepts any Eigen vector expressions of
// equal length.
template <typename DerivedA, typename DerivedB>
double distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                const DistanceSpec& spec) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance: arity mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  validate(spec);
  switch (spec.kind) {
    case DistanceKind::hamming:
      return static_cast<double>(
          (a.derived().array() != b.derived().array()).template cast<int>().sum());
    case DistanceKind::euclidean:
      return std::sqrt((a.derived().array() - b.derived().array()).square().sum());
    case DistanceKind::minkowski:
      return std::pow(
          (a.derived().array() - b.derived().array()).abs().pow(spec.p).sum(), 1.0 / spec.p);
  }
  throw std::logic_error("distance: unreachable");
}

// Ids of the k training rows nearest to query, sorted by (distance, id);
// distance ties break toward the lower id.
std::vector<int> k_nearest(const Matrix& train_features, RowRef query, int k,
                           const DistanceSpec& spec);
std::vector<int> k_nearest(const Dataset& train, RowRef query, int k, const DistanceSpec& spec);

}  // namespace rmcs
