#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace omega {

using state_id = std::uint32_t;
using letter_id = std::uint32_t;

// Set of states over a fixed universe [0, width). The width is chosen at
// construction and never changes; bits past the width stay zero.
class state_set {
 public:
  state_set() = default;

  explicit state_set(std::uint32_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  static state_set full(std::uint32_t width) {
    state_set s(width);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::uint32_t width() const { return width_; }

  bool test(state_id i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(state_id i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(state_id i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool subset_of(const state_set& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const state_set& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  state_set& operator|=(const state_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  state_set& operator&=(const state_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // this \ o
  state_set& subtract(const state_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend state_set operator|(state_set a, const state_set& b) { return a |= b; }
  friend state_set operator&(state_set a, const state_set& b) { return a &= b; }

  bool operator==(const state_set& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }
  bool operator!=(const state_set& o) const { return !(*this == o); }

  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<state_id>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (width_ & 63) words_.back() &= (std::uint64_t{1} << (width_ & 63)) - 1;
  }

  std::uint32_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace omega
