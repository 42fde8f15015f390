#include "rmcs/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "rmcs/voting.hpp"

namespace rmcs {

std::string ClassifierSpec::name() const {
  switch (kind()) {
    case ClassifierKind::knn: return "knn";
    case ClassifierKind::logistic_regression: return "logistic_regression";
    case ClassifierKind::decision_stump: return "decision_stump";
    case ClassifierKind::naive_bayes: return "naive_bayes";
  }
  return "?";
}

namespace {

double parse_num(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("classifier: bad value '" + value + "' for " + key);
  }
}

}  // namespace

ClassifierSpec parse_classifier(const std::string& entry) {
  std::istringstream in(entry);
  std::string kind;
  in >> kind;
  if (kind.empty()) throw std::invalid_argument("classifier: empty entry");

  ClassifierSpec spec;
  if (kind == "knn")
    spec.params = KnnParams{};
  else if (kind == "logistic_regression" || kind == "logreg")
    spec.params = LogisticRegressionParams{};
  else if (kind == "decision_stump" || kind == "stump")
    spec.params = DecisionStumpParams{};
  else if (kind == "naive_bayes")
    spec.params = NaiveBayesParams{};
  else
    throw std::invalid_argument("classifier: unknown kind '" + kind + "'");

  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("classifier: expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    bool ok = true;
    switch (spec.kind()) {
      case ClassifierKind::knn: {
        auto& p = std::get<KnnParams>(spec.params);
        if (key == "k")
          p.k = static_cast<int>(parse_num(key, value));
        else if (key == "distance")
          p.distance = parse_distance(value);
        else
          ok = false;
        break;
      }
      case ClassifierKind::logistic_regression: {
        auto& p = std::get<LogisticRegressionParams>(spec.params);
        if (key == "l2")
          p.l2 = parse_num(key, value);
        else if (key == "lr")
          p.learning_rate = parse_num(key, value);
        else if (key == "epochs")
          p.max_epochs = static_cast<int>(parse_num(key, value));
        else
          ok = false;
        break;
      }
      case ClassifierKind::decision_stump:
        ok = false;
        break;
      case ClassifierKind::naive_bayes: {
        auto& p = std::get<NaiveBayesParams>(spec.params);
        if (key == "alpha")
          p.alpha = parse_num(key, value);
        else
          ok = false;
        break;
      }
    }
    if (!ok)
      throw std::invalid_argument("classifier: " + kind + " does not take parameter '" + key + "'");
  }
  validate(spec);
  return spec;
}

std::vector<ClassifierSpec> parse_roster(const std::string& text) {
  std::vector<ClassifierSpec> roster;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    roster.push_back(parse_classifier(line));
  }
  if (roster.empty()) throw std::invalid_argument("roster: no classifier entries");
  return roster;
}

void validate(const ClassifierSpec& spec) {
  switch (spec.kind()) {
    case ClassifierKind::knn: {
      const auto& p = std::get<KnnParams>(spec.params);
      if (p.k < 1) throw std::invalid_argument("knn: k must be >= 1");
      validate(p.distance);
      break;
    }
    case ClassifierKind::logistic_regression: {
      const auto& p = std::get<LogisticRegressionParams>(spec.params);
      if (p.max_epochs < 1) throw std::invalid_argument("logistic_regression: epochs must be >= 1");
      if (!(p.learning_rate > 0)) throw std::invalid_argument("logistic_regression: learning rate must be > 0");
      if (p.l2 < 0) throw std::invalid_argument("logistic_regression: l2 must be >= 0");
      break;
    }
    case ClassifierKind::decision_stump:
      break;
    case ClassifierKind::naive_bayes: {
      const auto& p = std::get<NaiveBayesParams>(spec.params);
      if (!(p.alpha > 0)) throw std::invalid_argument("naive_bayes: alpha must be > 0");
      break;
    }
  }
}

namespace {

void check_weights(std::span<const double> weights, int n, bool supported, const char* kind) {
  if (weights.empty()) return;
  if (!supported)
    throw std::invalid_argument(std::string(kind) + " does not support instance weights");
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("fit: weights length != n_train");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("fit: negative instance weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-6)
    throw std::invalid_argument("fit: instance weights must sum to 1");
}

KnnState fit_knn(const KnnParams& p, const Dataset& train) {
  if (p.k > train.object_count())
    throw std::invalid_argument("knn: k=" + std::to_string(p.k) + " exceeds n_train=" +
                                std::to_string(train.object_count()));
  return {train.features, train.labels};
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

LogisticState fit_logistic(const LogisticRegressionParams& p, const Dataset& train) {
  const int n = train.object_count();
  const int d = train.feature_count();
  const int c_count = train.class_count();

  LogisticState st;
  st.weights = Matrix::Zero(c_count, d);
  st.bias = Eigen::VectorXd::Zero(c_count);

  // One-vs-rest, full-batch gradient descent from zero init.
  for (int c = 0; c < c_count; ++c) {
    Eigen::VectorXd target(n);
    for (int i = 0; i < n; ++i)
      target(i) = train.labels[static_cast<std::size_t>(i)] == c ? 1.0 : 0.0;

    Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
    double b = 0.0;
    for (int epoch = 0; epoch < p.max_epochs; ++epoch) {
      Eigen::VectorXd z = train.features * w;
      z.array() += b;
      const Eigen::VectorXd prob = z.unaryExpr([](double v) { return sigmoid(v); });
      const Eigen::VectorXd err = prob - target;
      const Eigen::VectorXd grad_w = train.features.transpose() * err / n + p.l2 * w;
      const double grad_b = err.sum() / n;
      w -= p.learning_rate * grad_w;
      b -= p.learning_rate * grad_b;
    }
    st.weights.row(c) = w.transpose();
    st.bias(c) = b;
  }
  return st;
}

StumpState fit_stump(const Dataset& train, std::span<const double> weights) {
  const int n = train.object_count();
  const int d = train.feature_count();
  const int c_count = train.class_count();

  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(static_cast<std::size_t>(n), 1.0 / n);

  std::vector<double> total_by_class(static_cast<std::size_t>(c_count), 0.0);
  for (int i = 0; i < n; ++i)
    total_by_class[static_cast<std::size_t>(train.labels[static_cast<std::size_t>(i)])] +=
        w[static_cast<std::size_t>(i)];

  const auto weighted_majority = [&](const std::vector<double>& mass) {
    int best = 0;
    for (int c = 1; c < c_count; ++c)
      if (mass[static_cast<std::size_t>(c)] > mass[static_cast<std::size_t>(best)]) best = c;
    return best;
  };

  // Fallback when no feature admits a split: predict the global weighted
  // majority on both sides.
  const int global = weighted_majority(total_by_class);
  StumpState best{0, -std::numeric_limits<double>::infinity(), global, global};
  double best_error = 1.0 - total_by_class[static_cast<std::size_t>(global)];

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int j = 0; j < d; ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return train.features(a, j) < train.features(b, j);
    });

    std::vector<double> left_mass(static_cast<std::size_t>(c_count), 0.0);
    int pos = 0;
    while (pos < n) {
      const double value = train.features(order[static_cast<std::size_t>(pos)], j);
      // Move every row sharing this value to the left side.
      while (pos < n && train.features(order[static_cast<std::size_t>(pos)], j) == value) {
        const int i = order[static_cast<std::size_t>(pos)];
        left_mass[static_cast<std::size_t>(train.labels[static_cast<std::size_t>(i)])] +=
            w[static_cast<std::size_t>(i)];
        ++pos;
      }
      if (pos == n) break;  // no value to the right, not a split
      const double next = train.features(order[static_cast<std::size_t>(pos)], j);
      const double threshold = 0.5 * (value + next);

      std::vector<double> right_mass(static_cast<std::size_t>(c_count), 0.0);
      for (int c = 0; c < c_count; ++c)
        right_mass[static_cast<std::size_t>(c)] =
            total_by_class[static_cast<std::size_t>(c)] - left_mass[static_cast<std::size_t>(c)];

      const int lc = weighted_majority(left_mass);
      const int rc = weighted_majority(right_mass);
      const double error = 1.0 - left_mass[static_cast<std::size_t>(lc)] -
                           right_mass[static_cast<std::size_t>(rc)];
      if (error < best_error - 1e-12) {
        best_error = error;
        best = {j, threshold, lc, rc};
      }
    }
  }
  return best;
}

NaiveBayesState fit_naive_bayes(const NaiveBayesParams& p, const Dataset& train,
                                std::span<const double> weights) {
  const int n = train.object_count();
  const int d = train.feature_count();
  const int c_count = train.class_count();
  constexpr double kVarFloor = 1e-9;

  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(static_cast<std::size_t>(n), 1.0 / n);

  NaiveBayesState st;
  st.feature_kind = train.feature_kind;
  st.log_prior.resize(c_count);
  st.log_p1 = Matrix::Zero(c_count, d);
  st.log_p0 = Matrix::Zero(c_count, d);
  st.mean = Matrix::Zero(c_count, d);
  st.var = Matrix::Constant(c_count, d, kVarFloor);

  Eigen::VectorXd class_mass = Eigen::VectorXd::Zero(c_count);
  for (int i = 0; i < n; ++i)
    class_mass(train.labels[static_cast<std::size_t>(i)]) += w[static_cast<std::size_t>(i)];
  const double total = class_mass.sum();
  for (int c = 0; c < c_count; ++c)
    st.log_prior(c) = std::log((class_mass(c) + p.alpha) / (total + c_count * p.alpha));

  for (int j = 0; j < d; ++j) {
    if (train.feature_kind[static_cast<std::size_t>(j)] == FeatureKind::binary) {
      Eigen::VectorXd ones = Eigen::VectorXd::Zero(c_count);
      for (int i = 0; i < n; ++i)
        if (train.features(i, j) == 1.0)
          ones(train.labels[static_cast<std::size_t>(i)]) += w[static_cast<std::size_t>(i)];
      for (int c = 0; c < c_count; ++c) {
        const double p1 = (ones(c) + p.alpha) / (class_mass(c) + 2.0 * p.alpha);
        st.log_p1(c, j) = std::log(p1);
        st.log_p0(c, j) = std::log(1.0 - p1);
      }
    } else {
      for (int c = 0; c < c_count; ++c) {
        double mass = class_mass(c);
        if (mass <= 0.0) continue;  // empty class keeps the floored defaults
        double mu = 0.0;
        for (int i = 0; i < n; ++i)
          if (train.labels[static_cast<std::size_t>(i)] == c)
            mu += w[static_cast<std::size_t>(i)] * train.features(i, j);
        mu /= mass;
        double var = 0.0;
        for (int i = 0; i < n; ++i)
          if (train.labels[static_cast<std::size_t>(i)] == c) {
            const double dlt = train.features(i, j) - mu;
            var += w[static_cast<std::size_t>(i)] * dlt * dlt;
          }
        var = var / mass + kVarFloor;
        st.mean(c, j) = mu;
        st.var(c, j) = var;
      }
    }
  }
  return st;
}

}  // namespace

TrainedModel fit(const ClassifierSpec& spec, const Dataset& train,
                 std::span<const double> weights) {
  validate(spec);
  if (train.object_count() == 0) throw std::invalid_argument("fit: empty training set");
  validate(train);

  TrainedModel model;
  model.spec = spec;
  model.n_classes = train.class_count();
  model.n_features = train.feature_count();

  switch (spec.kind()) {
    case ClassifierKind::knn:
      check_weights(weights, train.object_count(), false, "knn");
      model.state = fit_knn(std::get<KnnParams>(spec.params), train);
      break;
    case ClassifierKind::logistic_regression:
      check_weights(weights, train.object_count(), false, "logistic_regression");
      model.state = fit_logistic(std::get<LogisticRegressionParams>(spec.params), train);
      break;
    case ClassifierKind::decision_stump:
      check_weights(weights, train.object_count(), true, "decision_stump");
      model.state = fit_stump(train, weights);
      break;
    case ClassifierKind::naive_bayes:
      check_weights(weights, train.object_count(), true, "naive_bayes");
      model.state = fit_naive_bayes(std::get<NaiveBayesParams>(spec.params), train, weights);
      break;
  }
  return model;
}

namespace {

int predict_knn(const TrainedModel& model, const KnnState& st, RowRef x) {
  const auto& p = std::get<KnnParams>(model.spec.params);
  const std::vector<int> ids = k_nearest(st.train_features, x, p.k, p.distance);
  std::vector<int> votes;
  votes.reserve(ids.size());
  for (int id : ids) votes.push_back(st.train_labels[static_cast<std::size_t>(id)]);
  return majority_vote(votes, model.n_classes);
}

int predict_logistic(const TrainedModel& model, const LogisticState& st, RowRef x) {
  std::vector<double> scores(static_cast<std::size_t>(model.n_classes));
  for (int c = 0; c < model.n_classes; ++c)
    scores[static_cast<std::size_t>(c)] = st.weights.row(c).dot(x) + st.bias(c);
  return argmax_class(scores);
}

int predict_stump(const StumpState& st, RowRef x) {
  return x(st.feature) <= st.threshold ? st.left_class : st.right_class;
}

int predict_naive_bayes(const TrainedModel& model, const NaiveBayesState& st, RowRef x) {
  std::vector<double> scores(static_cast<std::size_t>(model.n_classes));
  for (int c = 0; c < model.n_classes; ++c) {
    double s = st.log_prior(c);
    for (int j = 0; j < model.n_features; ++j) {
      if (st.feature_kind[static_cast<std::size_t>(j)] == FeatureKind::binary) {
        s += x(j) == 1.0 ? st.log_p1(c, j) : st.log_p0(c, j);
      } else {
        const double var = st.var(c, j);
        const double dlt = x(j) - st.mean(c, j);
        s += -0.5 * std::log(2.0 * M_PI * var) - dlt * dlt / (2.0 * var);
      }
    }
    scores[static_cast<std::size_t>(c)] = s;
  }
  return argmax_class(scores);
}

}  // namespace

int predict(const TrainedModel& model, RowRef x) {
  if (static_cast<int>(x.size()) != model.n_features)
    throw std::invalid_argument("predict: arity mismatch (" + std::to_string(x.size()) +
                                " vs " + std::to_string(model.n_features) + ")");
  if (const auto* st = std::get_if<KnnState>(&model.state)) return predict_knn(model, *st, x);
  if (const auto* st = std::get_if<LogisticState>(&model.state))
    return predict_logistic(model, *st, x);
  if (const auto* st = std::get_if<StumpState>(&model.state)) return predict_stump(*st, x);
  return predict_naive_bayes(model, std::get<NaiveBayesState>(model.state), x);
}

std::vector<int> predict_rows(const TrainedModel& model, const Matrix& features) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(features.rows()));
  for (Eigen::Index i = 0; i < features.rows(); ++i)
    out.push_back(predict(model, features.row(i)));
  return out;
}

}  // namespace rmcs
