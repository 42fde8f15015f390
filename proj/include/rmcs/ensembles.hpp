#pragma once

#include <cstdint>
#include <vector>

#include "rmcs/classifiers.hpp"
#include "rmcs/dataset.hpp"

namespace rmcs {

// ---- bagging ----------------------------------------------------------------

struct BaggingModel {
  ClassifierSpec base_spec;
  int n_estimators = 0;
  std::uint64_t seed = 0;
  std::vector<TrainedModel> members;
};

// n draws with replacement from [0, n), from a fresh generator under seed.
std::vector<int> bootstrap_indices(std::uint64_t seed, int n);

// Trains n_estimators copies of base on bootstrap resamples of train. Member
// e resamples under derive_seed(seed, e), so members are independent and the
// whole fit is reproducible.
BaggingModel bagging_fit(const ClassifierSpec& base, const Dataset& train, int n_estimators,
                         std::uint64_t seed);

// Majority vote over members; ties resolve to the lowest class id.
int bagging_predict(const BaggingModel& model, RowRef x);

// ---- AdaBoost ---------------------------------------------------------------

struct AdaBoostModel {
  std::vector<TrainedModel> members;
  std::vector<double> alphas;    // one per member, finite
  std::vector<double> epsilons;  // weighted error of each accepted round
  int n_rounds = 0;
  int n_classes = 0;
};

// Alpha assigned to a perfect round instead of the infinite limit.
inline constexpr double kAdaBoostAlphaCap = 11.512925464970229;  // ln(1e10) / 2

// Multi-class AdaBoost.M1 on weighted decision stumps. Instance weights
// start at 1/n. Per round: fit a weighted stump, measure its weighted error
// e; stop keeping the member (capped alpha) when e == 0, stop discarding the
// round when e >= 0.5; otherwise alpha = ln((1-e)/e)/2, misclassified
// instances scale by exp(alpha), correct ones by exp(-alpha), then weights
// renormalize to sum 1.
AdaBoostModel adaboost_fit(const Dataset& train, int n_rounds);

// Class with the largest total alpha over members voting for it; ties
// resolve to the lowest class id.
int adaboost_predict(const AdaBoostModel& model, RowRef x);

}  // namespace rmcs
