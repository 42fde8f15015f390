#pragma once

// The bundled worked example: a 10-object binary dataset (8 train, 2 test),
// the classification context its four classifiers produce under
// leave-one-out cross-validation, and the neighbor sets used by the `toy`
// CLI command. Object names are 1-based to match the printed tables.

#include <string>
#include <vector>

#include "rmcs/dataset.hpp"
#include "rmcs/fca.hpp"
#include "rmcs/types.hpp"

namespace rmcs::toy {

// 8 training objects, 4 binary features, 2 classes ("0"/"1").
Dataset train_set();

// Feature rows of the 2 unlabeled test objects (names "9" and "10").
Matrix test_features();

// The train set as CSV text (header m1..m4,label).
std::string train_csv();

// 8 objects x 4 classifiers; cell set iff the classifier got the object
// right under leave-one-out cross-validation.
fca::FormalContext classification_context();

// 3-nearest-neighbor sets for test objects 9 and 10 (0-based train ids).
// Several training objects tie in Hamming distance, so these fix one valid
// resolution rather than deriving it from the raw distances.
std::vector<std::vector<int>> neighbor_sets();

}  // namespace rmcs::toy
