#ifndef BALLEAN_PRODUCT_HPP
#define BALLEAN_PRODUCT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ballean/ballcore.hpp"

namespace ballean {

struct PointedFactor {
  std::size_t size = 1;
  std::size_t basepoint = 0;

  friend bool operator==(const PointedFactor& lhs, const PointedFactor& rhs) = default;
};

// Finite family of pointed sets; elements of factor i are 0..size-1.
class PointedFamily {
 public:
  explicit PointedFamily(std::vector<PointedFactor> factors);

  std::size_t factor_count() const { return factors_.size(); }
  const std::vector<PointedFactor>& factors() const { return factors_; }

  // Product of the factor sizes; ResourceError past `limit`, no limit if 0.
  std::size_t total_size(std::size_t limit = 0) const;

  std::vector<std::size_t> basepoint_tuple() const;

  // Tuples enumerate in mixed radix with coordinate 0 varying fastest.
  std::size_t index_of(const std::vector<std::size_t>& coords) const;
  std::vector<std::size_t> coords_of(std::size_t index) const;

  friend bool operator==(const PointedFamily& lhs, const PointedFamily& rhs) = default;

 private:
  std::vector<PointedFactor> factors_;
};

inline constexpr std::size_t kDefaultMaxSupport = 4096;

// Tuple name "(c0,c1,...)".
std::string product_point_name(const std::vector<std::size_t>& coords);

// Support = all tuples; radii 0..gamma-1; ball(f, r) = tuples agreeing with f
// at every coordinate strictly above r. Consequences: ball(f, r) has size
// size_0 * ... * size_r, balls nest along the radii, the top ball is the
// whole support, and every radius partitions the support (the output is
// always cellular).
BallStructure build_product_ballean(const PointedFamily& family,
                                    std::size_t max_support = kDefaultMaxSupport);

// Classes of "agree at every coordinate >= level" for level in [0, gamma];
// level 0 gives singletons, level gamma one block. ball(f, r) equals the
// class of f at level r+1.
std::vector<std::vector<std::size_t>> product_partition(const PointedFamily& family,
                                                        std::size_t level);

}  // namespace ballean

#endif
