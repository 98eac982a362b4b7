#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace spectroscopy {

using state_id = std::uint32_t;

/// Fixed-universe bitset over the states of one transition system.
/// Two sets compare equal only if they share a universe size.
class state_set {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = state_id;
    using difference_type = std::ptrdiff_t;
    using pointer = const state_id*;
    using reference = state_id;

    const_iterator() = default;
    const_iterator(const std::vector<std::uint64_t>* words, std::size_t word, std::uint64_t rest)
        : words_(words), word_(word), rest_(rest) {
      settle();
    }

    state_id operator*() const {
      return static_cast<state_id>(word_ * 64 + static_cast<std::size_t>(std::countr_zero(rest_)));
    }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.word_ == b.word_ && a.rest_ == b.rest_;
    }

   private:
    void settle() {
      while (rest_ == 0 && words_ != nullptr && word_ + 1 < words_->size()) {
        ++word_;
        rest_ = (*words_)[word_];
      }
      if (rest_ == 0 && words_ != nullptr) word_ = words_->size();
    }

    const std::vector<std::uint64_t>* words_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t rest_ = 0;
  };

  state_set() = default;
  explicit state_set(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  [[nodiscard]] std::size_t universe() const { return universe_; }

  [[nodiscard]] bool contains(state_id s) const {
    return s < universe_ && ((words_[s / 64] >> (s % 64)) & 1U) != 0;
  }
  void insert(state_id s) { words_[s / 64] |= std::uint64_t{1} << (s % 64); }
  void erase(state_id s) { words_[s / 64] &= ~(std::uint64_t{1} << (s % 64)); }

  [[nodiscard]] bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  [[nodiscard]] std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  [[nodiscard]] bool is_subset_of(const state_set& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const state_set& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
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
  state_set& operator-=(const state_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend state_set operator|(state_set a, const state_set& b) { return a |= b; }
  friend state_set operator&(state_set a, const state_set& b) { return a &= b; }
  friend state_set operator-(state_set a, const state_set& b) { return a -= b; }

  [[nodiscard]] state_set complement() const {
    state_set out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  [[nodiscard]] const_iterator begin() const {
    if (words_.empty()) return end();
    return const_iterator(&words_, 0, words_[0]);
  }
  [[nodiscard]] const_iterator end() const { return const_iterator(&words_, words_.size(), 0); }

  [[nodiscard]] std::vector<state_id> elements() const { return {begin(), end()}; }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  friend bool operator==(const state_set&, const state_set&) = default;
  friend std::strong_ordering operator<=>(const state_set& a, const state_set& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace spectroscopy
