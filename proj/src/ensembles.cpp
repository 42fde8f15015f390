#include "rmcs/ensembles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rmcs/rng.hpp"
#include "rmcs/voting.hpp"

namespace rmcs {

std::vector<int> bootstrap_indices(std::uint64_t seed, int n) {
  if (n <= 0) throw std::invalid_argument("bootstrap_indices: n must be positive");
  Rng rng = seeded_rng(seed);
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    idx[static_cast<std::size_t>(i)] =
        static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  return idx;
}

BaggingModel bagging_fit(const ClassifierSpec& base, const Dataset& train, int n_estimators,
                         std::uint64_t seed) {
  if (train.object_count() == 0) throw std::invalid_argument("bagging_fit: empty training set");
  if (n_estimators < 1) throw std::invalid_argument("bagging_fit: n_estimators must be >= 1");

  BaggingModel model{base, n_estimators, seed, {}};
  model.members.reserve(static_cast<std::size_t>(n_estimators));
  for (int e = 0; e < n_estimators; ++e) {
    const auto rows = bootstrap_indices(derive_seed(seed, static_cast<std::uint64_t>(e)),
                                        train.object_count());
    try {
      model.members.push_back(fit(base, take(train, rows)));
    } catch (const std::exception& err) {
      throw std::runtime_error("bagging member " + std::to_string(e) + ": " + err.what());
    }
  }
  return model;
}

int bagging_predict(const BaggingModel& model, RowRef x) {
  if (model.members.empty()) throw std::invalid_argument("bagging_predict: unfitted model");
  std::vector<int> votes;
  votes.reserve(model.members.size());
  for (const auto& m : model.members) votes.push_back(predict(m, x));
  return majority_vote(votes, model.members.front().n_classes);
}

AdaBoostModel adaboost_fit(const Dataset& train, int n_rounds) {
  const int n = train.object_count();
  if (n == 0) throw std::invalid_argument("adaboost_fit: empty training set");
  if (n_rounds < 1) throw std::invalid_argument("adaboost_fit: n_rounds must be >= 1");

  AdaBoostModel model;
  model.n_rounds = n_rounds;
  model.n_classes = train.class_count();

  std::vector<double> weights(static_cast<std::size_t>(n), 1.0 / n);
  const ClassifierSpec stump{DecisionStumpParams{}};

  for (int t = 0; t < n_rounds; ++t) {
    TrainedModel member = fit(stump, train, weights);

    double epsilon = 0.0;
    std::vector<bool> correct(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const bool ok =
          predict(member, train.features.row(i)) == train.labels[static_cast<std::size_t>(i)];
      correct[static_cast<std::size_t>(i)] = ok;
      if (!ok) epsilon += weights[static_cast<std::size_t>(i)];
    }

    if (epsilon >= 0.5) break;  // no longer a weak learner, discard the round

    if (epsilon == 0.0) {
      model.members.push_back(std::move(member));
      model.alphas.push_back(kAdaBoostAlphaCap);
      model.epsilons.push_back(0.0);
      break;
    }

    const double alpha = 0.5 * std::log((1.0 - epsilon) / epsilon);
    model.members.push_back(std::move(member));
    model.alphas.push_back(alpha);
    model.epsilons.push_back(epsilon);

    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      auto& w = weights[static_cast<std::size_t>(i)];
      w *= std::exp(correct[static_cast<std::size_t>(i)] ? -alpha : alpha);
      sum += w;
    }
    for (auto& w : weights) w /= sum;
  }
  return model;
}

int adaboost_predict(const AdaBoostModel& model, RowRef x) {
  if (model.members.empty()) throw std::invalid_argument("adaboost_predict: unfitted model");
  std::vector<double> scores(static_cast<std::size_t>(model.n_classes), 0.0);
  for (std::size_t t = 0; t < model.members.size(); ++t)
    scores[static_cast<std::size_t>(predict(model.members[t], x))] += model.alphas[t];
  return argmax_class(scores);
}

}  // namespace rmcs
