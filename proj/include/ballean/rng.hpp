#ifndef BALLEAN_RNG_HPP
#define BALLEAN_RNG_HPP

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace ballean {

// SplitMix64 stream. Deliberately hand-rolled instead of <random>: the
// standard distributions are not bit-exact across library implementations,
// and generated fixtures must reproduce byte-identically everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n). Plain modulo: the bias is irrelevant here and the
  // result is platform independent.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    return next() % n;
  }

  // Uniform-ish in [lo, hi], inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    assert(lo <= hi);
    return lo + below(hi - lo + 1);
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace ballean

#endif
