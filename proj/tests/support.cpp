#include "support.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace testutil {

using ballean::BallStructure;
using ballean::BranchingProfile;
using ballean::FiniteMetricSpace;
using ballean::PointedFactor;
using ballean::PointedFamily;
using ballean::Rational;
using ballean::SplitMix64;
using ballean::SubgroupChain;

namespace {

std::vector<std::vector<std::set<std::size_t>>> ball_sets(const BallStructure& bs) {
  std::vector<std::vector<std::set<std::size_t>>> balls(
      bs.point_count(), std::vector<std::set<std::size_t>>(bs.radius_count()));
  for (std::size_t x = 0; x < bs.point_count(); ++x) {
    for (std::size_t r = 0; r < bs.radius_count(); ++r) {
      for (std::size_t y : bs.ball(x, r).to_vector()) {
        balls[x][r].insert(y);
      }
    }
  }
  return balls;
}

std::vector<std::string> numbered(const char* stem, std::size_t count) {
  std::vector<std::string> names(count);
  for (std::size_t i = 0; i < count; ++i) {
    names[i] = stem + std::to_string(i);
  }
  return names;
}

BallStructure structure_from_blocks(
    const std::vector<std::vector<std::vector<std::size_t>>>& blocks_per_level,
    std::size_t n) {
  const std::size_t m = blocks_per_level.size();
  std::vector<std::vector<ballean::IndexSet>> balls(
      n, std::vector<ballean::IndexSet>(m, ballean::IndexSet(n)));
  for (std::size_t level = 0; level < m; ++level) {
    for (const std::vector<std::size_t>& block : blocks_per_level[level]) {
      ballean::IndexSet members(n);
      for (std::size_t x : block) {
        members.insert(x);
      }
      for (std::size_t x : block) {
        balls[x][level] = members;
      }
    }
  }
  return BallStructure(numbered("p", n), numbered("", m), std::move(balls));
}

}  // namespace

BallStructure make_structure(std::vector<std::string> points, std::vector<std::string> radii,
                             std::vector<std::vector<std::vector<std::size_t>>> balls) {
  const std::size_t n = points.size();
  std::vector<std::vector<ballean::IndexSet>> sets(
      n, std::vector<ballean::IndexSet>(radii.size(), ballean::IndexSet(n)));
  for (std::size_t x = 0; x < balls.size(); ++x) {
    for (std::size_t r = 0; r < balls[x].size(); ++r) {
      for (std::size_t y : balls[x][r]) {
        sets[x][r].insert(y);
      }
    }
  }
  return BallStructure(std::move(points), std::move(radii), std::move(sets));
}

NaiveAxioms naive_axioms(const BallStructure& bs) {
  const std::size_t n = bs.point_count();
  const std::size_t m = bs.radius_count();
  const auto balls = ball_sets(bs);
  NaiveAxioms result;

  for (std::size_t x = 0; x < n && result.containment; ++x) {
    for (std::size_t r = 0; r < m && result.containment; ++r) {
      result.containment = balls[x][r].count(x) > 0;
    }
  }

  for (std::size_t a = 0; a < m && result.symmetry; ++a) {
    bool witnessed = false;
    for (std::size_t a2 = 0; a2 < m && !witnessed; ++a2) {
      witnessed = true;
      for (std::size_t x = 0; x < n && witnessed; ++x) {
        for (std::size_t y : balls[x][a]) {
          if (balls[y][a2].count(x) == 0) {
            witnessed = false;
            break;
          }
        }
      }
    }
    result.symmetry = witnessed;
  }
  for (std::size_t b = 0; b < m && result.symmetry; ++b) {
    bool witnessed = false;
    for (std::size_t b2 = 0; b2 < m && !witnessed; ++b2) {
      witnessed = true;
      for (std::size_t x = 0; x < n && witnessed; ++x) {
        for (std::size_t y = 0; y < n && witnessed; ++y) {
          if (balls[y][b].count(x) > 0 && balls[x][b2].count(y) == 0) {
            witnessed = false;
          }
        }
      }
    }
    result.symmetry = witnessed;
  }

  for (std::size_t a = 0; a < m && result.composition; ++a) {
    for (std::size_t b = 0; b < m && result.composition; ++b) {
      bool witnessed = false;
      for (std::size_t g = 0; g < m && !witnessed; ++g) {
        witnessed = true;
        for (std::size_t x = 0; x < n && witnessed; ++x) {
          for (std::size_t y : balls[x][a]) {
            for (std::size_t z : balls[y][b]) {
              if (balls[x][g].count(z) == 0) {
                witnessed = false;
                break;
              }
            }
            if (!witnessed) {
              break;
            }
          }
        }
      }
      result.composition = witnessed;
    }
  }
  return result;
}

std::vector<std::set<std::size_t>> naive_blocks(const BallStructure& bs,
                                                std::size_t radius) {
  const std::size_t n = bs.point_count();
  const auto balls = ball_sets(bs);
  std::vector<bool> seen(n, false);
  std::vector<std::set<std::size_t>> blocks;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    std::set<std::size_t> block;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      block.insert(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) {
          continue;
        }
        if (balls[u][radius].count(v) > 0 || balls[v][radius].count(u) > 0) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::size_t naive_cofinality(const BallStructure& bs) {
  const std::size_t n = bs.point_count();
  const std::size_t m = bs.radius_count();
  const auto balls = ball_sets(bs);

  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, true));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n && leq[a][b]; ++x) {
        leq[a][b] = std::includes(balls[x][b].begin(), balls[x][b].end(),
                                  balls[x][a].begin(), balls[x][a].end());
      }
    }
  }

  std::size_t best = m;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    bool dominating = true;
    for (std::size_t r = 0; r < m && dominating; ++r) {
      bool covered = false;
      for (std::size_t s = 0; s < m && !covered; ++s) {
        covered = ((mask >> s) & 1) != 0 && leq[r][s];
      }
      dominating = covered;
    }
    if (dominating) {
      best = std::min<std::size_t>(best, std::popcount(mask));
    }
  }
  return best;
}

bool naive_ultrametric(const FiniteMetricSpace& space) {
  const std::size_t n = space.point_count();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Rational& xz = space.distance(x, z);
        const Rational& zy = space.distance(z, y);
        const Rational& bound = xz < zy ? zy : xz;
        if (bound < space.distance(x, y)) {
          return false;
        }
      }
    }
  }
  return true;
}

FiniteMetricSpace random_metric_space(SplitMix64& rng, std::size_t max_points) {
  const std::size_t n = rng.range(1, max_points);
  std::vector<Rational> dist(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational w(static_cast<std::int64_t>(rng.range(1, 12)),
                       static_cast<std::int64_t>(rng.range(1, 3)));
      dist[i * n + j] = w;
      dist[j * n + i] = w;
    }
  }
  // Shortest paths turn arbitrary positive weights into a metric.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          continue;
        }
        const Rational through = dist[i * n + k] + dist[k * n + j];
        if (i != k && j != k && through < dist[i * n + j]) {
          dist[i * n + j] = through;
        }
      }
    }
  }
  return FiniteMetricSpace(numbered("p", n), std::move(dist));
}

BallStructure random_ballean(SplitMix64& rng, std::size_t max_points,
                             std::size_t max_radii) {
  const std::size_t n = rng.range(2, max_points);
  const std::size_t m = rng.range(1, max_radii);
  std::vector<std::vector<ballean::IndexSet>> balls(
      n, std::vector<ballean::IndexSet>(m, ballean::IndexSet(n)));
  for (std::size_t r = 0; r + 1 < m; ++r) {
    for (std::size_t x = 0; x < n; ++x) {
      balls[x][r].insert(x);
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (rng.below(4) == 0) {
          balls[x][r].insert(y);
          balls[y][r].insert(x);
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    balls[x][m - 1] = ballean::IndexSet::full(n);
  }
  return BallStructure(numbered("p", n), numbered("", m), std::move(balls));
}

BallStructure random_structure(SplitMix64& rng, std::size_t max_points,
                               std::size_t max_radii) {
  const std::size_t n = rng.range(1, max_points);
  const std::size_t m = rng.range(1, max_radii);
  std::vector<std::vector<ballean::IndexSet>> balls(
      n, std::vector<ballean::IndexSet>(m, ballean::IndexSet(n)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t y = 0; y < n; ++y) {
        if (rng.below(3) == 0) {
          balls[x][r].insert(y);
        }
      }
      if (rng.below(4) != 0) {
        balls[x][r].insert(x);
      }
    }
  }
  return BallStructure(numbered("p", n), numbered("", m), std::move(balls));
}

BallStructure random_hierarchy(SplitMix64& rng, BranchingProfile& profile_out) {
  BranchingProfile profile;
  std::size_t total = 0;
  for (;;) {
    profile.mu = rng.range(1, 3);
    profile.kappas.assign(rng.range(0, 4), 0);
    total = profile.mu;
    for (std::size_t& kappa : profile.kappas) {
      kappa = rng.range(2, 4);
      total *= kappa;
    }
    if (total <= 324) {
      break;
    }
  }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  const std::size_t m = profile.kappas.size() + 1;
  std::vector<std::vector<std::vector<std::size_t>>> blocks(m);
  std::size_t width = profile.mu;
  for (std::size_t level = 0; level < m; ++level) {
    for (std::size_t base = 0; base < total; base += width) {
      blocks[level].emplace_back(order.begin() + static_cast<std::ptrdiff_t>(base),
                                 order.begin() + static_cast<std::ptrdiff_t>(base + width));
    }
    if (level < profile.kappas.size()) {
      width *= profile.kappas[level];
    }
  }
  profile_out = std::move(profile);
  return structure_from_blocks(blocks, total);
}

BallStructure random_cellular_chain(SplitMix64& rng, std::size_t max_points,
                                    std::size_t max_levels) {
  const std::size_t n = rng.range(2, max_points);
  const std::size_t m = rng.range(1, max_levels);

  std::vector<std::vector<std::vector<std::size_t>>> blocks(m);
  std::vector<std::size_t> everything(n);
  std::iota(everything.begin(), everything.end(), 0);
  blocks[m - 1].push_back(everything);
  for (std::size_t level = m - 1; level-- > 0;) {
    for (const std::vector<std::size_t>& block : blocks[level + 1]) {
      if (rng.below(4) == 0) {
        blocks[level].push_back(block);  // repeated level, still a valid chain
        continue;
      }
      const std::size_t parts = rng.range(1, std::min<std::size_t>(3, block.size()));
      std::vector<std::vector<std::size_t>> buckets(parts);
      for (std::size_t member : block) {
        buckets[rng.below(parts)].push_back(member);
      }
      for (std::vector<std::size_t>& bucket : buckets) {
        if (!bucket.empty()) {
          blocks[level].push_back(std::move(bucket));
        }
      }
    }
  }
  return structure_from_blocks(blocks, n);
}

PointedFamily random_family(SplitMix64& rng, std::size_t max_total) {
  std::vector<std::size_t> sizes;
  for (;;) {
    sizes.assign(rng.range(1, 4), 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      sizes[i] = i == 0 ? rng.range(1, 4) : rng.range(2, 4);
      total *= sizes[i];
    }
    if (total <= max_total) {
      break;
    }
  }
  std::vector<PointedFactor> factors;
  factors.reserve(sizes.size());
  for (std::size_t size : sizes) {
    factors.push_back(PointedFactor{size, rng.below(size)});
  }
  return PointedFamily(std::move(factors));
}

SubgroupChain cyclic_subgroup_chain(std::size_t n, const std::vector<std::size_t>& orders) {
  std::vector<std::vector<std::size_t>> chain;
  chain.reserve(orders.size());
  for (std::size_t order : orders) {
    const std::size_t step = n / order;
    std::vector<std::size_t> level(order);
    for (std::size_t i = 0; i < order; ++i) {
      level[i] = i * step;
    }
    chain.push_back(std::move(level));
  }
  return SubgroupChain{ballean::cyclic_group(n), std::move(chain)};
}

std::pair<SubgroupChain, SubgroupChain> random_chain_pair(SplitMix64& rng) {
  std::vector<std::size_t> indices;
  std::size_t total = 0;
  for (;;) {
    indices.assign(rng.range(1, 4), 0);
    total = 1;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      indices[k] = k == 0 ? rng.range(1, 4) : rng.range(2, 4);
      total *= indices[k];
    }
    if (total <= 64) {
      break;
    }
  }

  auto realize = [&]() {
    if (rng.below(2) == 0) {
      std::vector<std::size_t> orders(indices.size());
      std::size_t running = 1;
      for (std::size_t k = 0; k < indices.size(); ++k) {
        running *= indices[k];
        orders[k] = running;
      }
      return cyclic_subgroup_chain(total, orders);
    }
    std::vector<std::vector<std::size_t>> spec(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (indices[k] == 4 && rng.below(2) == 1) {
        spec[k] = {2, 2};
      } else if (indices[k] > 1) {
        spec[k] = {indices[k]};
      }
    }
    return ballean::chain_of_cyclic_levels(spec);
  };

  SubgroupChain first = realize();
  SubgroupChain second = realize();
  return {std::move(first), std::move(second)};
}

BallStructure perturb(const BallStructure& bs, SplitMix64& rng) {
  const std::size_t n = bs.point_count();
  const std::size_t m = bs.radius_count();
  std::vector<std::vector<ballean::IndexSet>> balls(
      n, std::vector<ballean::IndexSet>(m, ballean::IndexSet(n)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t r = 0; r < m; ++r) {
      balls[x][r] = bs.ball(x, r);
    }
  }
  balls[rng.below(n)][rng.below(m)].flip(rng.below(n));
  return BallStructure(bs.support(), bs.radii(), std::move(balls));
}

}  // namespace testutil
