#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace biface {

// Fixed-universe bitset used for extents and intents.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe, bool full = false)
      : size_(universe), words_((universe + 63) / 64, 0) {
    if (full) {
      for (auto& w : words_) w = ~0ULL;
      trim();
    }
  }

  std::size_t universe() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

  // this \ o
  IndexSet minus(const IndexSet& o) const {
    IndexSet r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
    return r;
  }

  bool operator==(const IndexSet& o) const { return words_ == o.words_; }
  bool operator!=(const IndexSet& o) const { return words_ != o.words_; }
  bool operator<(const IndexSet& o) const { return words_ < o.words_; }

  bool is_subset_of(const IndexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool is_strict_subset_of(const IndexSet& o) const {
    return is_subset_of(o) && words_ != o.words_;
  }
  bool intersects(const IndexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  void for_each(const std::function<void(std::size_t)>& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> v;
    v.reserve(count());
    for_each([&](std::size_t i) { v.push_back(i); });
    return v;
  }

  static IndexSet singleton(std::size_t universe, std::size_t i) {
    IndexSet s(universe);
    s.set(i);
    return s;
  }

 private:
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (~0ULL) >> (64 - size_ % 64);
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace biface
