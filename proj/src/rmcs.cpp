#include "rmcs/rmcs.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>

#include "rmcs/rng.hpp"
#include "rmcs/voting.hpp"

namespace rmcs {

ClassificationContext build_classification_context(const std::vector<ClassifierSpec>& roster,
                                                   const Dataset& train, int n_folds,
                                                   std::uint64_t seed) {
  const int n = train.object_count();
  const int n_classifiers = static_cast<int>(roster.size());
  if (n_classifiers == 0) throw std::invalid_argument("classification context: empty roster");
  if (n_folds == kLeaveOneOut) n_folds = n;
  if (n_folds < 2 || n_folds > n)
    throw std::invalid_argument("classification context: n_folds=" + std::to_string(n_folds) +
                                " outside [2, " + std::to_string(n) + "]");

  std::vector<std::string> object_names;
  object_names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) object_names.push_back(std::to_string(i + 1));
  std::vector<std::string> attribute_names;
  attribute_names.reserve(static_cast<std::size_t>(n_classifiers));
  for (int j = 0; j < n_classifiers; ++j) attribute_names.push_back("cl" + std::to_string(j + 1));

  ClassificationContext ctx(n, n_classifiers, std::move(object_names),
                            std::move(attribute_names));
  ctx.set_name("classification context");

  // Deal shuffled objects into contiguous near-equal folds: the first
  // n % n_folds folds take one extra object.
  Rng rng = seeded_rng(seed);
  const std::vector<int> order = shuffled_indices(n, rng);
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(n_folds));
  int cursor = 0;
  for (int f = 0; f < n_folds; ++f) {
    const int size = n / n_folds + (f < n % n_folds ? 1 : 0);
    auto& fold = folds[static_cast<std::size_t>(f)];
    fold.assign(order.begin() + cursor, order.begin() + cursor + size);
    std::sort(fold.begin(), fold.end());
    cursor += size;
  }

  for (int f = 0; f < n_folds; ++f) {
    const auto& holdout = folds[static_cast<std::size_t>(f)];
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - holdout.size());
    std::size_t h = 0;
    for (int i = 0; i < n; ++i) {
      if (h < holdout.size() && holdout[h] == i) {
        ++h;
        continue;
      }
      rest.push_back(i);
    }
    const Dataset fold_train = take(train, rest);
    for (int j = 0; j < n_classifiers; ++j) {
      TrainedModel model;
      try {
        model = fit(roster[static_cast<std::size_t>(j)], fold_train);
      } catch (const std::exception& e) {
        throw std::runtime_error("classification context: fold " + std::to_string(f) +
                                 ", classifier " + std::to_string(j) + ": " + e.what());
      }
      for (int i : holdout)
        if (predict(model, train.features.row(i)) == train.labels[static_cast<std::size_t>(i)])
          ctx.set_incidence(i, j);
    }
  }
  return ctx;
}

PredictionTable predict_table(const std::vector<ClassifierSpec>& roster, const Dataset& train,
                              const Dataset& test) {
  if (roster.empty()) throw std::invalid_argument("predict_table: empty roster");
  if (train.feature_count() != test.feature_count())
    throw std::invalid_argument("predict_table: train/test arity mismatch");

  PredictionTable table(test.object_count(), static_cast<int>(roster.size()));
  for (int j = 0; j < static_cast<int>(roster.size()); ++j) {
    try {
      const TrainedModel model = fit(roster[static_cast<std::size_t>(j)], train);
      for (int i = 0; i < test.object_count(); ++i)
        table(i, j) = predict(model, test.features.row(i));
    } catch (const std::exception& e) {
      throw std::runtime_error("predict_table: classifier " + std::to_string(j) + ": " + e.what());
    }
  }
  return table;
}

std::vector<int> select_classifiers(const fca::TopConcepts& tops, int n_attributes,
                                    std::span<const int> neighbors) {
  if (neighbors.empty()) throw std::invalid_argument("select_classifiers: empty neighbor set");

  if (!tops.top.intent.empty()) return tops.top.intent;

  const auto all = [n_attributes] {
    std::vector<int> out(static_cast<std::size_t>(n_attributes));
    for (int j = 0; j < n_attributes; ++j) out[static_cast<std::size_t>(j)] = j;
    return out;
  };
  if (tops.lower_neighbors.empty()) return all();

  std::vector<int> sorted_neighbors(neighbors.begin(), neighbors.end());
  std::sort(sorted_neighbors.begin(), sorted_neighbors.end());

  std::vector<int> scores;
  scores.reserve(tops.lower_neighbors.size());
  int best = 0;
  for (const auto& lower : tops.lower_neighbors) {
    std::vector<int> common;
    std::set_intersection(lower.extent.begin(), lower.extent.end(),
                          sorted_neighbors.begin(), sorted_neighbors.end(),
                          std::back_inserter(common));
    scores.push_back(static_cast<int>(common.size()));
    best = std::max(best, scores.back());
  }
  if (best == 0) return all();

  std::set<int> selected;
  for (std::size_t i = 0; i < tops.lower_neighbors.size(); ++i)
    if (scores[i] == best)
      selected.insert(tops.lower_neighbors[i].intent.begin(),
                      tops.lower_neighbors[i].intent.end());
  return {selected.begin(), selected.end()};
}

std::vector<int> select_classifiers(const ClassificationContext& cc,
                                    std::span<const int> neighbors) {
  if (cc.object_count() == 0 || cc.attribute_count() == 0)
    throw std::invalid_argument("select_classifiers: empty classification context");
  for (int g : neighbors)
    if (g < 0 || g >= cc.object_count())
      throw std::invalid_argument("select_classifiers: neighbor id " + std::to_string(g) +
                                  " outside the context");
  return select_classifiers(fca::top_cbo(cc), cc.attribute_count(), neighbors);
}

RmcsResult classify_from_parts(const fca::TopConcepts& tops, const PredictionTable& table,
                               const std::vector<std::vector<int>>& neighbor_sets,
                               int n_classes) {
  if (static_cast<Eigen::Index>(neighbor_sets.size()) != table.rows())
    throw std::invalid_argument("classify_from_parts: one neighbor set per test row required");

  RmcsResult result;
  result.labels.reserve(neighbor_sets.size());
  result.selected.reserve(neighbor_sets.size());
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    const auto selected = select_classifiers(tops, static_cast<int>(table.cols()),
                                             neighbor_sets[static_cast<std::size_t>(i)]);
    std::vector<int> votes;
    votes.reserve(selected.size());
    for (int j : selected) votes.push_back(table(i, j));
    result.labels.push_back(majority_vote(votes, n_classes));
    result.selected.push_back(selected);
  }
  return result;
}

RmcsResult rmcs_classify_detailed(const RmcsConfig& config, const Dataset& train,
                                  const Dataset& test) {
  if (config.k < 1 || config.k > train.object_count())
    throw std::invalid_argument("rmcs: k outside [1, n_train]");
  if (train.feature_count() != test.feature_count())
    throw std::invalid_argument("rmcs: train/test arity mismatch");

  const ClassificationContext cc =
      build_classification_context(config.roster, train, config.n_folds, config.seed);
  const PredictionTable table = predict_table(config.roster, train, test);
  const fca::TopConcepts tops = fca::top_cbo(cc);

  std::vector<std::vector<int>> neighbor_sets;
  neighbor_sets.reserve(static_cast<std::size_t>(test.object_count()));
  for (int i = 0; i < test.object_count(); ++i)
    neighbor_sets.push_back(k_nearest(train, test.features.row(i), config.k, config.distance));

  return classify_from_parts(tops, table, neighbor_sets, train.class_count());
}

std::vector<int> rmcs_classify(const RmcsConfig& config, const Dataset& train,
                               const Dataset& test) {
  return rmcs_classify_detailed(config, train, test).labels;
}

}  // namespace rmcs
