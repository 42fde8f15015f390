#include "rmcs/toy.hpp"

namespace rmcs::toy {

namespace {

// Feature rows of the 10 objects in table order. Label column: objects 1-8
// carry 1,1,0,1,1,0,1,0; objects 9 and 10 are the test pair.
constexpr double kFeatures[10][4] = {
    {1, 1, 0, 1},  // 1
    {1, 0, 0, 1},  // 2
    {0, 1, 1, 0},  // 3
    {1, 0, 1, 1},  // 4
    {1, 1, 1, 0},  // 5
    {0, 1, 1, 1},  // 6
    {1, 1, 1, 0},  // 7
    {0, 0, 1, 1},  // 8
    {1, 1, 1, 1},  // 9
    {0, 1, 0, 1},  // 10
};
constexpr int kLabels[8] = {1, 1, 0, 1, 1, 0, 1, 0};

// Correct-classification marks per (object, classifier).
constexpr int kContext[8][4] = {
    {1, 0, 1, 1},  // 1: cl1 cl3 cl4
    {0, 1, 1, 0},  // 2: cl2 cl3
    {1, 0, 0, 1},  // 3: cl1 cl4
    {0, 1, 1, 0},  // 4: cl2 cl3
    {1, 1, 0, 0},  // 5: cl1 cl2
    {1, 1, 0, 1},  // 6: cl1 cl2 cl4
    {0, 1, 0, 1},  // 7: cl2 cl4
    {0, 1, 1, 1},  // 8: cl2 cl3 cl4
};

}  // namespace

Dataset train_set() {
  Dataset ds;
  ds.features.resize(8, 4);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 4; ++j) ds.features(i, j) = kFeatures[i][j];
  ds.labels.assign(std::begin(kLabels), std::end(kLabels));
  ds.feature_names = {"m1", "m2", "m3", "m4"};
  ds.label_names = {"0", "1"};
  ds.feature_kind.assign(4, FeatureKind::binary);
  return ds;
}

Matrix test_features() {
  Matrix x(2, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) x(i, j) = kFeatures[8 + i][j];
  return x;
}

std::string train_csv() {
  std::string out = "m1,m2,m3,m4,label\n";
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 4; ++j) {
      out += kFeatures[i][j] ? '1' : '0';
      out += ',';
    }
    out += kLabels[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

fca::FormalContext classification_context() {
  std::vector<std::string> objects;
  for (int i = 1; i <= 8; ++i) objects.push_back(std::to_string(i));
  fca::FormalContext ctx(8, 4, std::move(objects), {"cl1", "cl2", "cl3", "cl4"});
  ctx.set_name("toy classification context");
  for (int g = 0; g < 8; ++g)
    for (int m = 0; m < 4; ++m)
      if (kContext[g][m]) ctx.set_incidence(g, m);
  return ctx;
}

std::vector<std::vector<int>> neighbor_sets() {
  // Objects {4,5,7} for test object 9 and {1,6,8} for test object 10,
  // as 0-based train ids.
  return {{3, 4, 6}, {0, 5, 7}};
}

}  // namespace rmcs::toy
