#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmcs/classifiers.hpp"
#include "rmcs/dataset.hpp"
#include "rmcs/distance.hpp"
#include "rmcs/fca.hpp"

namespace rmcs {

// Formal context whose objects are training rows and whose attributes are
// roster positions; cell (i, j) is set iff classifier j predicted object i's
// label correctly under cross-validation.
using ClassificationContext = fca::FormalContext;

// Sentinel for RmcsConfig::n_folds selecting leave-one-out cross-validation
// (one fold per training object).
inline constexpr int kLeaveOneOut = 0;

struct RmcsConfig {
  std::vector<ClassifierSpec> roster;
  int k = 3;
  int n_folds = 4;  // kLeaveOneOut selects n_folds = n_train
  DistanceSpec distance{};
  std::uint64_t seed = 0;
};

// Cross-validates every roster entry: objects are dealt into n_folds
// near-equal folds by a seeded shuffle, each classifier is fitted once per
// fold on the complement and predicts that fold. n_folds must lie in
// [2, n_train]; kLeaveOneOut maps to n_train.
ClassificationContext build_classification_context(const std::vector<ClassifierSpec>& roster,
                                                   const Dataset& train, int n_folds,
                                                   std::uint64_t seed);

// (i, j) holds classifier j's predicted class id for test object i; each
// classifier is fitted once on the full training set.
using PredictionTable = Eigen::MatrixXi;

PredictionTable predict_table(const std::vector<ClassifierSpec>& roster, const Dataset& train,
                              const Dataset& test);

// The classifier indices recommended for a test object whose training-set
// neighbors are given. If the top concept's intent is non-empty those
// classifiers were correct on every training object and win outright.
// Otherwise the lower neighbors are scored by |extent n neighbors|: a unique
// argmax returns its intent, tied maxima return the union of their intents,
// and an empty or zero-score field falls back to the whole roster.
std::vector<int> select_classifiers(const ClassificationContext& cc,
                                    std::span<const int> neighbors);

// Same selection from precomputed top concepts (n_attributes = roster size).
std::vector<int> select_classifiers(const fca::TopConcepts& tops, int n_attributes,
                                    std::span<const int> neighbors);

struct RmcsResult {
  std::vector<int> labels;                  // one per test object
  std::vector<std::vector<int>> selected;   // recommended classifier indices per test object
};

// Labels for the test rows given precomputed top concepts, a prediction
// table, and one neighbor set per test row: majority vote over the selected
// classifiers' table entries, ties to the lowest class id.
RmcsResult classify_from_parts(const fca::TopConcepts& tops, const PredictionTable& table,
                               const std::vector<std::vector<int>>& neighbor_sets, int n_classes);

// The full pipeline: build the classification context, fit the roster on the
// whole training set, extract top concepts, and classify every test row via
// its k nearest training neighbors.
RmcsResult rmcs_classify_detailed(const RmcsConfig& config, const Dataset& train,
                                  const Dataset& test);

std::vector<int> rmcs_classify(const RmcsConfig& config, const Dataset& train,
                               const Dataset& test);

}  // namespace rmcs
