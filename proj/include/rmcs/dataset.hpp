#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rmcs/types.hpp"

namespace rmcs {

enum class FeatureKind { binary, numeric };

// A loaded dataset: numeric feature matrix plus dense class labels.
// Categorical CSV columns are one-hot encoded at load time, so features are
// always numeric; binary-flagged columns contain only 0 and 1. Immutable by
// convention after load.
struct Dataset {
  Matrix features;  // n_objects x n_features
  std::vector<int> labels;
  std::vector<std::string> feature_names;
  std::vector<std::string> label_names;
  std::vector<FeatureKind> feature_kind;

  int object_count() const { return static_cast<int>(features.rows()); }
  int feature_count() const { return static_cast<int>(features.cols()); }
  int class_count() const { return static_cast<int>(label_names.size()); }

  RowRef row(int i) const { return features.row(i); }
};

// Checks the structural invariants (arity, binary columns, label range);
// throws std::invalid_argument on violation.
void validate(const Dataset& ds);

class LoadError : public std::runtime_error {
 public:
  enum class Kind { missing_file, empty, ragged_row, bad_value, bad_label_column };

  LoadError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Reads a comma-separated file. label_column selects the label by header
// name or 0-based index ("" means the last column). A feature column is
// parsed as numeric when its first data value parses as a number (later
// non-numeric values in it are an error); otherwise it is categorical and
// one-hot encoded into binary columns named "col=value" with categories in
// sorted order. Label values are mapped to dense ids in sorted order.
Dataset load_csv(const std::string& path, const std::string& label_column = "",
                 bool has_header = true);

// Same parsing, from an in-memory string ("name" only labels error messages).
Dataset load_csv_text(const std::string& text, const std::string& label_column = "",
                      bool has_header = true, const std::string& name = "<memory>");

// New dataset holding the given rows (duplicates allowed), preserving all
// column and label metadata.
Dataset take(const Dataset& ds, std::span<const int> rows);

// Deterministic shuffle split. Train side gets round(train_fraction * n)
// objects; both sides keep ascending original row order.
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, std::uint64_t seed);

// Min-max scales numeric columns to [0, 1] (constant columns map to 0);
// binary columns pass through.
Dataset minmax_normalize(const Dataset& ds);

std::string to_csv(const Dataset& ds);

}  // namespace rmcs
