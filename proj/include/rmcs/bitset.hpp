#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rmcs {

// Fixed-size dynamic bitset. Trailing bits of the last word are kept zero so
// whole-word comparison and popcount stay valid.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int size, bool fill = false)
      : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64, fill ? ~0ULL : 0ULL) {
    if (size < 0) throw std::invalid_argument("Bitset: negative size");
    if (fill) mask_tail();
  }

  static Bitset from_indices(int size, std::span<const int> indices) {
    Bitset b(size);
    for (int i : indices) b.set(i);
    return b;
  }

  int size() const { return size_; }

  bool test(int i) const {
    check(i);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ULL;
  }

  void set(int i) {
    check(i);
    words_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63);
  }

  void reset(int i) {
    check(i);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool is_subset_of(const Bitset& o) const {
    require_same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  int intersection_count(const Bitset& o) const {
    require_same_size(o);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= size_) throw std::out_of_range("Bitset: index out of range");
  }

  void require_same_size(const Bitset& o) const {
    if (size_ != o.size_) throw std::invalid_argument("Bitset: size mismatch");
  }

  void mask_tail() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ULL << (size_ % 64)) - 1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rmcs
