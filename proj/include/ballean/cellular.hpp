#ifndef BALLEAN_CELLULAR_HPP
#define BALLEAN_CELLULAR_HPP

#include <cstddef>
#include <vector>

#include "ballean/ballcore.hpp"

namespace ballean {

// Per-radius path components of a ball structure. Two points are adjacent at
// a radius when either lies in the other's ball; components of that
// symmetrized relation partition the support, so the closed balls of a fixed
// radius are the blocks of a partition by construction.
class PathClosure {
 public:
  static PathClosure compute(const BallStructure& base);

  const BallStructure& base() const { return base_; }

  // Blocks at one radius, listed by smallest member, members ascending.
  const std::vector<std::vector<std::size_t>>& blocks(std::size_t radius) const;
  std::size_t block_of(std::size_t radius, std::size_t point) const;
  const IndexSet& closed_ball(std::size_t point, std::size_t radius) const;

 private:
  explicit PathClosure(BallStructure base) : base_(std::move(base)) {}

  BallStructure base_;
  std::vector<std::vector<std::vector<std::size_t>>> blocks_;  // [radius][block][member]
  std::vector<std::vector<IndexSet>> block_sets_;              // [radius][block]
  std::vector<std::vector<std::size_t>> block_of_;             // [radius][point]
};

// Points reachable from `point` by chains of overlapping balls of one radius.
IndexSet path_ball(const BallStructure& bs, std::size_t point, std::size_t radius);

// Same support and radii, every ball replaced by its path component. Total:
// works on any ball structure, valid or not.
BallStructure path_closure(const BallStructure& bs);

// path_closure guarded by the axiom check; a failed check is an InputError.
BallStructure cellularization(const BallStructure& bs);

// True iff every ball already equals its path component.
bool is_cellular(const BallStructure& bs);

// The blocks of ball(., radius), which must already be path-closed at that
// radius (otherwise ContractError naming a violating pair).
std::vector<std::vector<std::size_t>> partition_at(const BallStructure& bs, std::size_t radius);

}  // namespace ballean

#endif
