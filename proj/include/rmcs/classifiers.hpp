#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rmcs/dataset.hpp"
#include "rmcs/distance.hpp"
#include "rmcs/types.hpp"

namespace rmcs {

// ---- classifier roster -----------------------------------------------------

struct KnnParams {
  int k = 3;
  DistanceSpec distance{};
};

struct LogisticRegressionParams {
  double l2 = 1e-3;
  double learning_rate = 0.5;
  int max_epochs = 300;
};

struct DecisionStumpParams {};

struct NaiveBayesParams {
  double alpha = 1.0;  // Laplace smoothing for Bernoulli likelihoods and priors
};

enum class ClassifierKind { knn, logistic_regression, decision_stump, naive_bayes };

struct ClassifierSpec {
  std::variant<KnnParams, LogisticRegressionParams, DecisionStumpParams, NaiveBayesParams> params =
      KnnParams{};

  ClassifierKind kind() const { return static_cast<ClassifierKind>(params.index()); }
  std::string name() const;
};

// Parses one roster entry: a kind name optionally followed by key=value
// hyperparameters, e.g. "knn k=5 distance=minkowski:1" or
// "logistic_regression l2=0.01 lr=0.1 epochs=500" or "naive_bayes alpha=2".
// Accepted kind names: knn, logistic_regression (logreg), decision_stump
// (stump), naive_bayes.
ClassifierSpec parse_classifier(const std::string& entry);

// Roster config text: one entry per line, '#' comments and blank lines
// skipped.
std::vector<ClassifierSpec> parse_roster(const std::string& text);

// Throws std::invalid_argument when a hyperparameter is out of range
// (k >= 1, alpha > 0, epochs >= 1, learning_rate > 0, l2 >= 0).
void validate(const ClassifierSpec& spec);

// ---- fitted models ---------------------------------------------------------

struct KnnState {
  Matrix train_features;
  std::vector<int> train_labels;
};

struct LogisticState {
  Matrix weights;       // n_classes x n_features, one-vs-rest rows
  Eigen::VectorXd bias;  // n_classes
};

struct StumpState {
  int feature = 0;
  double threshold = 0.0;
  int left_class = 0;   // predicted when x[feature] <= threshold
  int right_class = 0;  // predicted otherwise
};

struct NaiveBayesState {
  Eigen::VectorXd log_prior;  // n_classes
  Matrix log_p1;              // n_classes x n_features, Bernoulli log P(x=1|c)
  Matrix log_p0;              // Bernoulli log P(x=0|c)
  Matrix mean;                // Gaussian per-class mean (numeric features)
  Matrix var;                 // Gaussian per-class variance, floored
  std::vector<FeatureKind> feature_kind;
};

struct TrainedModel {
  ClassifierSpec spec;
  int n_classes = 0;
  int n_features = 0;
  std::variant<KnnState, LogisticState, StumpState, NaiveBayesState> state;
};

// Fits spec on train. weights, when given, must have length n_train, be
// non-negative, and sum to 1; decision_stump and naive_bayes fit the weighted
// objective, knn and logistic_regression reject weights outright. Fitting is
// deterministic. A single-class training set yields a model that always
// predicts that class.
TrainedModel fit(const ClassifierSpec& spec, const Dataset& train,
                 std::span<const double> weights = {});

// Predicted class id for one feature row; ties resolve to the lowest class id.
int predict(const TrainedModel& model, RowRef x);

std::vector<int> predict_rows(const TrainedModel& model, const Matrix& features);

}  // namespace rmcs
