#ifndef BALLEAN_TESTS_SUPPORT_HPP
#define BALLEAN_TESTS_SUPPORT_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "ballean/ballcore.hpp"
#include "ballean/decompose.hpp"
#include "ballean/groupball.hpp"
#include "ballean/metrics.hpp"
#include "ballean/product.hpp"
#include "ballean/rng.hpp"

// Oracles here re-derive results from the definitions with plain std::set
// loops, sharing no logic with the library internals, so a test comparing the
// two catches bugs on either side.
namespace testutil {

// Structure with explicit names; balls[point][radius] lists member indices.
ballean::BallStructure make_structure(std::vector<std::string> points,
                                      std::vector<std::string> radii,
                                      std::vector<std::vector<std::vector<std::size_t>>> balls);

struct NaiveAxioms {
  bool containment = true;
  bool symmetry = true;
  bool composition = true;
};

// Quantifier-by-quantifier transcription of the ballean axioms.
NaiveAxioms naive_axioms(const ballean::BallStructure& bs);

// Components of the symmetrized step relation at one radius, via set-based
// depth-first search; blocks keyed by smallest member.
std::vector<std::set<std::size_t>> naive_blocks(const ballean::BallStructure& bs,
                                                std::size_t radius);

// Smallest dominating radius-set size, by scanning all 2^m subsets.
std::size_t naive_cofinality(const ballean::BallStructure& bs);

bool naive_ultrametric(const ballean::FiniteMetricSpace& space);

// Generators. Every one is deterministic in the rng state it is handed.

// Shortest-path metric over random positive rational edge weights.
ballean::FiniteMetricSpace random_metric_space(ballean::SplitMix64& rng,
                                               std::size_t max_points);

// Valid ballean: random symmetric relations per radius below a full top.
ballean::BallStructure random_ballean(ballean::SplitMix64& rng, std::size_t max_points,
                                      std::size_t max_radii);

// Arbitrary ball structure, usually breaking one axiom or another.
ballean::BallStructure random_structure(ballean::SplitMix64& rng, std::size_t max_points,
                                        std::size_t max_radii);

// Uniformly branching nested partitions over a shuffled support; reports the
// profile it was built from. mu in 1..3, up to 4 splits of 2..4, at most 324
// points.
ballean::BallStructure random_hierarchy(ballean::SplitMix64& rng,
                                        ballean::BranchingProfile& profile_out);

// Nested partitions with arbitrary block sizes, single top block, possibly
// repeating a level; connected, cellular, linearly ordered radii.
ballean::BallStructure random_cellular_chain(ballean::SplitMix64& rng,
                                             std::size_t max_points,
                                             std::size_t max_levels);

// First factor of size 1..4, later factors 2..4, random basepoints, total
// size at most max_total.
ballean::PointedFamily random_family(ballean::SplitMix64& rng, std::size_t max_total);

// The chain of subgroups of the given orders inside Z_n (each order divides
// the next, the last is n).
ballean::SubgroupChain cyclic_subgroup_chain(std::size_t n,
                                             const std::vector<std::size_t>& orders);

// Two chains with equal profiles and independently chosen realizations
// (single cyclic group with nested subgroups, or a direct sum of cyclic
// factors per level), group order at most 64.
std::pair<ballean::SubgroupChain, ballean::SubgroupChain> random_chain_pair(
    ballean::SplitMix64& rng);

// Copy with one membership bit flipped at a random (point, radius, member).
ballean::BallStructure perturb(const ballean::BallStructure& bs,
                               ballean::SplitMix64& rng);

}  // namespace testutil

#endif
