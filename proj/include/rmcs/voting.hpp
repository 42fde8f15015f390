#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace rmcs {

// Majority vote over class ids; ties resolve to the lowest class id.
inline int majority_vote(std::span<const int> votes, int n_classes) {
  if (votes.empty()) throw std::invalid_argument("majority_vote: no votes");
  std::vector<int> tally(static_cast<std::size_t>(n_classes), 0);
  for (int v : votes) {
    if (v < 0 || v >= n_classes) throw std::invalid_argument("majority_vote: class id out of range");
    ++tally[static_cast<std::size_t>(v)];
  }
  int best = 0;
  for (int c = 1; c < n_classes; ++c)
    if (tally[static_cast<std::size_t>(c)] > tally[static_cast<std::size_t>(best)]) best = c;
  return best;
}

// Argmax over per-class scores; ties resolve to the lowest class id.
inline int argmax_class(std::span<const double> scores) {
  if (scores.empty()) throw std::invalid_argument("argmax_class: no scores");
  int best = 0;
  for (int c = 1; c < static_cast<int>(scores.size()); ++c)
    if (scores[static_cast<std::size_t>(c)] > scores[static_cast<std::size_t>(best)]) best = c;
  return best;
}

}  // namespace rmcs
