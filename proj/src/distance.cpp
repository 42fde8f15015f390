#include "rmcs/distance.hpp"

#include <algorithm>
#include <charconv>

namespace rmcs {

void validate(const DistanceSpec& spec) {
  if (spec.kind == DistanceKind::minkowski && !(spec.p >= 1.0))
    throw std::invalid_argument("DistanceSpec: Minkowski order p must be >= 1");
}

DistanceSpec parse_distance(const std::string& text) {
  if (text == "hamming") return {DistanceKind::hamming, 0.0};
  if (text == "euclidean") return {DistanceKind::euclidean, 2.0};
  if (text.rfind("minkowski:", 0) == 0) {
    const std::string num = text.substr(10);
    double p = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc() || ptr != num.data() + num.size() || !(p >= 1.0))
      throw std::invalid_argument("distance: bad Minkowski order '" + num + "'");
    return {DistanceKind::minkowski, p};
  }
  throw std::invalid_argument("distance: unknown spec '" + text +
                              "' (expected hamming, euclidean, or minkowski:P)");
}

std::string to_string(const DistanceSpec& spec) {
  switch (spec.kind) {
    case DistanceKind::hamming: return "hamming";
    case DistanceKind::euclidean: return "euclidean";
    case DistanceKind::minkowski: {
      std::string p = std::to_string(spec.p);
      p.erase(p.find_last_not_of('0') + 1);
      if (!p.empty() && p.back() == '.') p.pop_back();
      return "minkowski:" + p;
    }
  }
  return "?";
}

std::vector<int> k_nearest(const Matrix& train_features, RowRef query, int k,
                           const DistanceSpec& spec) {
  const int n = static_cast<int>(train_features.rows());
  if (k < 1 || k > n)
    throw std::invalid_argument("k_nearest: k=" + std::to_string(k) +
                                " outside [1, " + std::to_string(n) + "]");
  std::vector<std::pair<double, int>> by_distance;
  by_distance.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    by_distance.emplace_back(distance(train_features.row(i), query, spec), i);
  std::sort(by_distance.begin(), by_distance.end());
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) ids.push_back(by_distance[static_cast<std::size_t>(i)].second);
  return ids;
}

std::vector<int> k_nearest(const Dataset& train, RowRef query, int k, const DistanceSpec& spec) {
  return k_nearest(train.features, query, k, spec);
}

}  // namespace rmcs
