#ifndef BALLEAN_INDEX_SET_HPP
#define BALLEAN_INDEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ballean {

// Subset of a fixed universe {0, ..., universe-1}, packed 64 indices per word.
// Two sets compare equal only if they have the same universe; all binary
// operations require matching universes.
class IndexSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  IndexSet() = default;

  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet set(universe);
    for (auto& word : set.words_) word = ~std::uint64_t{0};
    set.mask_tail();
    return set;
  }

  static IndexSet single(std::size_t universe, std::size_t index) {
    IndexSet set(universe);
    set.insert(index);
    return set;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t index) const {
    assert(index < universe_);
    return (words_[index >> 6] >> (index & 63)) & 1;
  }

  void insert(std::size_t index) {
    assert(index < universe_);
    words_[index >> 6] |= std::uint64_t{1} << (index & 63);
  }

  void erase(std::size_t index) {
    assert(index < universe_);
    words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
  }

  void flip(std::size_t index) {
    assert(index < universe_);
    words_[index >> 6] ^= std::uint64_t{1} << (index & 63);
  }

  void insert_range(std::size_t begin, std::size_t end) {
    assert(begin <= end && end <= universe_);
    for (std::size_t i = begin; i < end && (i & 63) != 0; ++i) insert(i);
    std::size_t aligned = (begin + 63) & ~std::size_t{63};
    if (aligned > end) return;
    std::size_t word = aligned >> 6;
    for (; aligned + 64 <= end; aligned += 64, ++word) words_[word] = ~std::uint64_t{0};
    for (std::size_t i = aligned; i < end; ++i) insert(i);
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto word : words_) total += static_cast<std::size_t>(std::popcount(word));
    return total;
  }

  bool empty() const {
    for (auto word : words_)
      if (word != 0) return false;
    return true;
  }

  bool is_subset_of(const IndexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  IndexSet& operator|=(const IndexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  friend bool operator==(const IndexSet& lhs, const IndexSet& rhs) = default;

  // Smallest member, or npos when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
  }

  // Smallest member of *this \ other, or npos when *this is a subset.
  std::size_t first_not_in(const IndexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t diff = words_[w] & ~other.words_[w];
      if (diff != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    }
    return npos;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> members;
    members.reserve(count());
    for_each([&](std::size_t i) { members.push_back(i); });
    return members;
  }

 private:
  void mask_tail() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ballean

#endif
