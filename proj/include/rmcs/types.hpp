#pragma once

#include <Eigen/Dense>

namespace rmcs {

// Feature matrices are row-major so a single object's row is contiguous and
// binds to Eigen::Ref without a copy.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVec = Eigen::RowVectorXd;
using RowRef = Eigen::Ref<const RowVec>;

}  // namespace rmcs
