#include "ballean/metrics.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ballean/cellular.hpp"
#include "ballean/errors.hpp"
#include "ballean/rng.hpp"

namespace ballean {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points,
                                     std::vector<Rational> distances)
    : points_(std::move(points)), distances_(std::move(distances)) {
  const std::size_t n = points_.size();
  if (n == 0) throw InputError("metric space with no points");
  {
    std::set<std::string> seen;
    for (const std::string& name : points_)
      if (!seen.insert(name).second) throw InputError("duplicate point name '" + name + "'");
  }
  if (distances_.size() != n * n)
    throw InputError("distance matrix is not square over the point list");
  for (std::size_t i = 0; i < n; ++i)
    if (!distances_[i * n + i].is_zero())
      throw InputError("nonzero self-distance at '" + points_[i] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(distances_[i * n + j] == distances_[j * n + i]))
        throw InputError("asymmetric distance between '" + points_[i] + "' and '" + points_[j] +
                         "'");
      if (!(Rational(0) < distances_[i * n + j]))
        throw InputError("non-positive distance between '" + points_[i] + "' and '" + points_[j] +
                         "'");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (distances_[i * n + k] + distances_[k * n + j] < distances_[i * n + j])
          throw InputError("triangle inequality fails on ('" + points_[i] + "','" + points_[k] +
                           "','" + points_[j] + "')");
}

const std::string& FiniteMetricSpace::point_name(std::size_t point) const {
  if (point >= points_.size()) throw InputError("point index out of range");
  return points_[point];
}

const Rational& FiniteMetricSpace::distance(std::size_t a, std::size_t b) const {
  if (a >= points_.size() || b >= points_.size()) throw InputError("point index out of range");
  return distances_[a * points_.size() + b];
}

BallStructure metric_ballean(const FiniteMetricSpace& space) {
  const std::size_t n = space.point_count();
  std::set<Rational> values;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) values.insert(space.distance(i, j));
  std::vector<Rational> radii(values.begin(), values.end());
  std::vector<std::string> radius_names;
  radius_names.reserve(radii.size());
  for (const Rational& value : radii) radius_names.push_back(value.to_string());
  std::vector<std::vector<IndexSet>> balls(n);
  for (std::size_t x = 0; x < n; ++x) {
    balls[x].reserve(radii.size());
    for (const Rational& value : radii) {
      IndexSet ball(n);
      for (std::size_t y = 0; y < n; ++y)
        if (space.distance(x, y) <= value) ball.insert(y);
      balls[x].push_back(std::move(ball));
    }
  }
  return BallStructure(space.points(), std::move(radius_names), std::move(balls));
}

bool is_ultrametric(const FiniteMetricSpace& space) {
  const std::size_t n = space.point_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Rational& xz = space.distance(x, z);
        const Rational& zy = space.distance(z, y);
        const Rational& bound = xz < zy ? zy : xz;
        if (bound < space.distance(x, y)) return false;
      }
  return true;
}

namespace {

// Radius indices sorted by the containment preorder, ties by index. Assumes
// linearity was already checked.
std::vector<std::size_t> linear_radius_order(const BallStructure& bs,
                                             const std::vector<std::vector<bool>>& leq) {
  std::vector<std::size_t> order(bs.radius_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return leq[a][b] && !leq[b][a];
  });
  return order;
}

}  // namespace

UltrametrizeResult ultrametrize(const BallStructure& bs) {
  if (!is_connected(bs)) throw ContractError("ultrametrize requires a connected structure");
  if (!is_cellular(bs)) throw ContractError("ultrametrize requires a cellular structure");
  const std::size_t m = bs.radius_count();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = radii_leq(bs, i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!leq[i][j] && !leq[j][i])
        throw ContractError("ultrametrize requires linearly ordered radii: '" +
                            bs.radius_name(i) + "' and '" + bs.radius_name(j) +
                            "' are incomparable");

  std::vector<std::size_t> order = linear_radius_order(bs, leq);
  const std::size_t n = bs.point_count();
  std::vector<Rational> dist(n * n, Rational(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      std::size_t rank = 0;
      while (rank < m && !bs.ball(x, order[rank]).contains(y)) ++rank;
      // Connected plus linear order means the top ball reaches everything.
      Rational d(static_cast<std::int64_t>(rank) + 1);
      dist[x * n + y] = d;
      dist[y * n + x] = d;
    }
  std::vector<Rational> radius_distance(m, Rational(0));
  for (std::size_t rank = 0; rank < m; ++rank)
    radius_distance[order[rank]] = Rational(static_cast<std::int64_t>(rank) + 1);
  return UltrametrizeResult{FiniteMetricSpace(bs.support(), std::move(dist)),
                            std::move(radius_distance)};
}

Asymorphism ultrametrize_witness(const BallStructure& bs, const UltrametrizeResult& result) {
  const std::size_t n = bs.point_count();
  const std::size_t m = bs.radius_count();
  if (result.space.point_count() != n || result.radius_distance.size() != m)
    throw InputError("ultrametrize result does not match the structure");
  std::set<Rational> values;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) values.insert(result.space.distance(i, j));
  std::vector<Rational> target_values(values.begin(), values.end());

  Asymorphism map;
  map.forward.resize(n);
  for (std::size_t x = 0; x < n; ++x) map.forward[x] = x;
  // Original radius -> largest realized distance not above its stand-in
  // value; the two balls coincide, so the bound is exact.
  map.forward_bound.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t best = 0;
    for (std::size_t j = 0; j < target_values.size(); ++j)
      if (target_values[j] <= result.radius_distance[a]) best = j;
    map.forward_bound[a] = best;
  }
  // Distance value v > 0 is realized only as rank+1; send its radius back to
  // the original radius of that rank. The zero radius maps to the finest one.
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.radius_distance[a] < result.radius_distance[b];
  });
  map.backward_bound.assign(target_values.size(), order[0]);
  for (std::size_t j = 0; j < target_values.size(); ++j) {
    if (target_values[j].is_zero()) {
      map.backward_bound[j] = order[0];
      continue;
    }
    std::int64_t rank = target_values[j].num() - 1;  // realized values are integers
    map.backward_bound[j] = order[static_cast<std::size_t>(rank)];
  }
  return map;
}

FiniteMetricSpace random_ultrametric(std::uint64_t seed, std::size_t points, std::size_t depth) {
  if (points == 0) throw InputError("random ultrametric with no points");
  if (depth == 0) throw InputError("random ultrametric with zero depth");
  SplitMix64 rng(seed);
  const std::size_t n = points;
  std::vector<Rational> dist(n * n, Rational(0));
  auto set_pair = [&](std::size_t a, std::size_t b, std::size_t level) {
    dist[a * n + b] = Rational(static_cast<std::int64_t>(level));
    dist[b * n + a] = dist[a * n + b];
  };

  std::function<void(std::vector<std::size_t>, std::size_t)> split =
      [&](std::vector<std::size_t> cluster, std::size_t level) {
        if (cluster.size() <= 1) return;
        if (level == 1) {
          for (std::size_t i = 0; i < cluster.size(); ++i)
            for (std::size_t j = i + 1; j < cluster.size(); ++j)
              set_pair(cluster[i], cluster[j], 1);
          return;
        }
        std::size_t max_parts = std::min<std::size_t>(cluster.size(), 4);
        std::size_t parts = 2 + rng.below(max_parts - 1);
        rng.shuffle(cluster);
        std::set<std::size_t> cuts;
        while (cuts.size() < parts - 1)
          cuts.insert(1 + static_cast<std::size_t>(rng.below(cluster.size() - 1)));
        std::vector<std::size_t> bounds(cuts.begin(), cuts.end());
        bounds.push_back(cluster.size());
        std::vector<std::vector<std::size_t>> groups;
        std::size_t start = 0;
        for (std::size_t end : bounds) {
          groups.emplace_back(cluster.begin() + start, cluster.begin() + end);
          start = end;
        }
        for (std::size_t g = 0; g < groups.size(); ++g)
          for (std::size_t h = g + 1; h < groups.size(); ++h)
            for (std::size_t a : groups[g])
              for (std::size_t b : groups[h]) set_pair(a, b, level);
        for (auto& group : groups) split(std::move(group), level - 1);
      };

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  split(std::move(all), depth);

  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return FiniteMetricSpace(std::move(names), std::move(dist));
}

}  // namespace ballean
