#ifndef BALLEAN_GROUPBALL_HPP
#define BALLEAN_GROUPBALL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ballean/ballcore.hpp"
#include "ballean/decompose.hpp"
#include "ballean/errors.hpp"

namespace ballean {

// A finite group given by its multiplication table; element 0 is the
// identity by convention. Construction checks shape only (square table,
// entries in range); the group laws are certified by validate_group.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return table_.size(); }
  std::size_t product(std::size_t a, std::size_t b) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs) = default;

 private:
  std::vector<std::vector<std::size_t>> table_;
};

struct GroupCheck {
  bool ok = true;
  std::vector<std::size_t> witness;  // the offending element indices, if any
  std::string detail;
};

// Checks, in order: each row and column is a permutation, element 0 is a
// two-sided identity, associativity on all triples, every element has an
// inverse. Reports the first violation found.
GroupCheck validate_group(const FiniteGroup& g);

// Nested subgroups G_0 within G_1 within ... within G_{m-1} = the whole
// group, each given extensionally by element indices.
struct SubgroupChain {
  FiniteGroup group;
  std::vector<std::vector<std::size_t>> chain;
};

// First reason sc is not a valid subgroup chain (group laws, membership of
// the identity, closure under product and inverse, strict growth, last level
// equal to the whole group), or nullopt when sc is valid.
std::optional<std::string> chain_violation(const SubgroupChain& sc);

// Support = group elements named "g0".."g{n-1}", radii "0".."m-1",
// ball(g, k) = the left coset g * G_k. The output satisfies the ballean
// axioms, is cellular at every radius, and is connected.
// InputError when chain_violation reports a problem.
BallStructure group_ballean(const SubgroupChain& sc);

// mu = |G_0|, kappas[k] = |G_{k+1}| / |G_k|; always agrees with
// check_homogeneity(group_ballean(sc)). InputError on an invalid chain.
BranchingProfile chain_profile(const SubgroupChain& sc);

std::string profile_string(const BranchingProfile& profile);

class ProfileMismatchError : public ContractError {
 public:
  ProfileMismatchError(BranchingProfile left, BranchingProfile right);

  const BranchingProfile& left() const { return left_; }
  const BranchingProfile& right() const { return right_; }

 private:
  BranchingProfile left_;
  BranchingProfile right_;
};

// Explicit point bijection between the two group balleans, built by sending
// each side onto the product of the common profile and composing through it.
// Identity maps to identity, and every ball maps exactly onto the ball of the
// same radius index around the image. ProfileMismatchError when the chains
// have different profiles.
Asymorphism asymorphism_between(const SubgroupChain& scG, const SubgroupChain& scH);

// Z_n with addition; element 0 is the identity.
FiniteGroup cyclic_group(std::size_t n);

// Componentwise product on tuples, encoded in mixed radix with the first
// group's coordinate varying fastest.
FiniteGroup direct_sum(const std::vector<FiniteGroup>& groups);

// Direct sum of cyclic groups bundled into chain levels: level k contributes
// the cyclic factors with the given moduli (each at least 2), and G_k is the
// subgroup supported on the factors of levels 0..k. Level 0 may be empty,
// making G_0 trivial.
SubgroupChain chain_of_cyclic_levels(const std::vector<std::vector<std::size_t>>& levels);

// Deterministic sample chain: picks a level-0 order in 1..4 and per-level
// indices in 2..4, keeping the total order at most 64 (so levels must be at
// most 7, else InputError), then realizes each level by cyclic factors,
// flipping a coin between Z_4 and Z_2 x Z_2 when an index is 4.
SubgroupChain truncated_locally_finite(std::uint64_t seed, std::size_t levels);

}  // namespace ballean

#endif
