#ifndef BALLEAN_METRICS_HPP
#define BALLEAN_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ballean/ballcore.hpp"
#include "ballean/rational.hpp"

namespace ballean {

// Finite metric space over exact rationals. Construction checks the metric
// laws in full (zero diagonal, symmetry, positivity off the diagonal,
// triangle inequality) and names the offending pair or triple on failure, so
// a constructed instance is always a genuine metric space.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> points, std::vector<Rational> distances);

  std::size_t point_count() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(std::size_t point) const;
  const Rational& distance(std::size_t a, std::size_t b) const;

  friend bool operator==(const FiniteMetricSpace& lhs, const FiniteMetricSpace& rhs) {
    return lhs.points_ == rhs.points_ && lhs.distances_ == rhs.distances_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<Rational> distances_;  // row-major
};

// Ball structure of a metric space: one radius per distinct distance value
// (ascending, named by the value), B(x, r) = { y : d(x,y) <= r }.
BallStructure metric_ballean(const FiniteMetricSpace& space);

// Strong triangle inequality: d(x,y) <= max(d(x,z), d(z,y)) for all triples.
bool is_ultrametric(const FiniteMetricSpace& space);

// Integer-valued ultrametric read off a connected cellular structure with
// linearly ordered radii: d(x,y) = 1 + the rank (in the radii order) of the
// first ball around x that captures y. radius_distance maps each original
// radius index to the distance value standing in for it.
struct UltrametrizeResult {
  FiniteMetricSpace space;
  std::vector<Rational> radius_distance;
};
UltrametrizeResult ultrametrize(const BallStructure& bs);

// The identity on the support as an asymorphism from bs onto
// metric_ballean(result.space), with bounds derived from radius_distance.
Asymorphism ultrametrize_witness(const BallStructure& bs, const UltrametrizeResult& result);

// Deterministic dendrogram ultrametric: recursive random partitioning with
// separation level as distance. Same seed, same space.
FiniteMetricSpace random_ultrametric(std::uint64_t seed, std::size_t points, std::size_t depth);

}  // namespace ballean

#endif
