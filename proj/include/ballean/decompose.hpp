#ifndef BALLEAN_DECOMPOSE_HPP
#define BALLEAN_DECOMPOSE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ballean/ballcore.hpp"
#include "ballean/errors.hpp"
#include "ballean/product.hpp"

namespace ballean {

// Shape of a homogeneous hierarchy: every radius-0 ball has mu points, and
// every ball at radius a+1 splits into kappas[a] balls of radius a.
struct BranchingProfile {
  std::size_t mu = 1;
  std::vector<std::size_t> kappas;

  // [mu] ++ kappas; the product of the entries is the support size.
  std::vector<std::size_t> factor_sizes() const;

  friend bool operator==(const BranchingProfile& lhs, const BranchingProfile& rhs) =
      default;
};

// The homogeneity conditions, in the order they are checked:
//   i   every radius is cellular (each ball equals its path component),
//   ii  balls grow strictly along the radius index,
//   iii reserved: it concerns radii with no immediate predecessor, and every
//       radius in a finite list has one, so it cannot fail here,
//   iv  all radius-0 balls share one size,
//   v   every radius-(a+1) ball splits into the same number of radius-a balls.
enum class HomogeneityCondition { kCellularity, kNesting, kRootSize, kSplitCount };

// "i", "ii", "iv" or "v".
const char* condition_label(HomogeneityCondition condition);

struct HomogeneityViolation {
  HomogeneityCondition condition;
  std::size_t point = 0;
  std::size_t radius = 0;
  // For kRootSize and kSplitCount: {expected, found}. Empty otherwise.
  std::vector<std::size_t> sizes;
  std::string detail;
};

struct HomogeneityReport {
  bool ok = false;
  BranchingProfile profile;  // meaningful only when ok
  std::optional<HomogeneityViolation> violation;
};

// Thrown by decompose when the input fails a homogeneity condition.
class HomogeneityError : public ContractError {
 public:
  HomogeneityError(const std::string& what, HomogeneityReport report)
      : ContractError(what), report_(std::move(report)) {}

  const HomogeneityReport& report() const { return report_; }

 private:
  HomogeneityReport report_;
};

// Checks conditions i, ii, iv, v in that order and reports either the profile
// or the first violation (scanning points, then radii, ascending).
//
// Requires a structure that passes validate, has linearly ordered radii, and
// whose last radius ball is the whole support for every point; anything else
// is a ContractError naming the failed requirement.
HomogeneityReport check_homogeneity(const BallStructure& bs);

// A partition's blocks arranged so the block holding x0 comes first with x0
// as its representative; the rest follow by smallest member, which is also
// their representative.
struct BlockOrder {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> representatives;
};

// ContractError if no block contains x0.
BlockOrder canonical_block_order(std::vector<std::vector<std::size_t>> blocks,
                                 std::size_t x0);

struct Decomposition {
  PointedFamily family;
  Asymorphism map;
};

// Rebuilds a homogeneous hierarchy as the product of its branching profile:
// the returned family has factor sizes [mu] ++ kappas with basepoint 0
// everywhere, and the map sends each ball exactly onto the product ball of
// the same radius index, with basepoint going to the all-basepoints tuple.
//
// Throws HomogeneityError when check_homogeneity rejects bs, and InputError
// when basepoint is out of range.
Decomposition decompose(const BallStructure& bs, std::size_t basepoint = 0);

}  // namespace ballean

#endif
