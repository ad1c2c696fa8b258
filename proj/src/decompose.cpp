#include "ballean/decompose.hpp"

#include <algorithm>
#include <utility>

#include "ballean/cellular.hpp"

namespace ballean {

std::vector<std::size_t> BranchingProfile::factor_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(1 + kappas.size());
  sizes.push_back(mu);
  sizes.insert(sizes.end(), kappas.begin(), kappas.end());
  return sizes;
}

const char* condition_label(HomogeneityCondition condition) {
  switch (condition) {
    case HomogeneityCondition::kCellularity:
      return "i";
    case HomogeneityCondition::kNesting:
      return "ii";
    case HomogeneityCondition::kRootSize:
      return "iv";
    case HomogeneityCondition::kSplitCount:
      return "v";
  }
  return "?";
}

namespace {

// Number of distinct radius-`inner` balls covering the members of `outer_ball`.
// Assumes the inner radius is cellular, so those balls partition the cover.
std::size_t split_count(const BallStructure& bs, const IndexSet& outer_ball,
                        std::size_t inner) {
  const std::size_t n = bs.point_count();
  IndexSet seen(n);
  std::size_t count = 0;
  outer_ball.for_each([&](std::size_t y) {
    if (seen.contains(y)) return;
    seen |= bs.ball(y, inner);
    ++count;
  });
  return count;
}

HomogeneityViolation cellularity_violation(const BallStructure& bs, std::size_t x,
                                           std::size_t r, const IndexSet& component) {
  const IndexSet& ball = bs.ball(x, r);
  std::size_t witness = component.first_not_in(ball);
  if (witness == IndexSet::npos) {
    witness = ball.first_not_in(component);
  }
  HomogeneityViolation v;
  v.condition = HomogeneityCondition::kCellularity;
  v.point = x;
  v.radius = r;
  v.detail = "ball of '" + bs.point_name(x) + "' at radius '" + bs.radius_name(r) +
             "' differs from its path component at '" + bs.point_name(witness) + "'";
  return v;
}

}  // namespace

HomogeneityReport check_homogeneity(const BallStructure& bs) {
  const std::size_t n = bs.point_count();
  const std::size_t m = bs.radius_count();

  AxiomReport axioms = validate(bs);
  if (!axioms.ok()) {
    std::string message =
        "check_homogeneity requires a structure satisfying the ballean axioms";
    for (const std::string& line : describe(axioms, bs)) {
      message += "; " + line;
    }
    throw ContractError(message);
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!radii_leq(bs, a, b) && !radii_leq(bs, b, a)) {
        throw ContractError("check_homogeneity requires linearly ordered radii: '" +
                            bs.radius_name(a) + "' and '" + bs.radius_name(b) +
                            "' are incomparable");
      }
    }
  }
  const IndexSet everything = IndexSet::full(n);
  for (std::size_t x = 0; x < n; ++x) {
    const IndexSet& top = bs.ball(x, m - 1);
    if (!(top == everything)) {
      throw ContractError(
          "check_homogeneity requires the last radius ball to cover the support: "
          "ball of '" +
          bs.point_name(x) + "' misses '" +
          bs.point_name(everything.first_not_in(top)) + "'");
    }
  }

  HomogeneityReport report;

  // i: each ball equals its path component.
  const PathClosure closure = PathClosure::compute(bs);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t r = 0; r < m; ++r) {
      const IndexSet& component = closure.closed_ball(x, r);
      if (!(bs.ball(x, r) == component)) {
        report.violation = cellularity_violation(bs, x, r, component);
        return report;
      }
    }
  }

  // ii: strict growth along adjacent radii (transitivity covers the rest).
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t r = 0; r + 1 < m; ++r) {
      const IndexSet& inner = bs.ball(x, r);
      const IndexSet& outer = bs.ball(x, r + 1);
      if (inner.is_subset_of(outer) && inner.count() < outer.count()) {
        continue;
      }
      HomogeneityViolation v;
      v.condition = HomogeneityCondition::kNesting;
      v.point = x;
      v.radius = r;
      v.detail = "ball of '" + bs.point_name(x) + "' at radius '" + bs.radius_name(r) +
                 "' is not a proper subset of its ball at radius '" +
                 bs.radius_name(r + 1) + "'";
      report.violation = std::move(v);
      return report;
    }
  }

  // iii cannot fail on a finite radius list; see the header.

  // iv: one common size for the radius-0 balls.
  const std::size_t mu = bs.ball(0, 0).count();
  for (std::size_t x = 1; x < n; ++x) {
    const std::size_t found = bs.ball(x, 0).count();
    if (found == mu) {
      continue;
    }
    HomogeneityViolation v;
    v.condition = HomogeneityCondition::kRootSize;
    v.point = x;
    v.radius = 0;
    v.sizes = {mu, found};
    v.detail = "ball of '" + bs.point_name(x) + "' at radius '" + bs.radius_name(0) +
               "' has " + std::to_string(found) + " points; expected " +
               std::to_string(mu);
    report.violation = std::move(v);
    return report;
  }

  // v: uniform split counts, one per adjacent radius pair.
  std::vector<std::size_t> kappas(m >= 1 ? m - 1 : 0, 0);
  for (std::size_t r = 0; r + 1 < m; ++r) {
    kappas[r] = split_count(bs, bs.ball(0, r + 1), r);
  }
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t r = 0; r + 1 < m; ++r) {
      const std::size_t found = split_count(bs, bs.ball(x, r + 1), r);
      if (found == kappas[r]) {
        continue;
      }
      HomogeneityViolation v;
      v.condition = HomogeneityCondition::kSplitCount;
      v.point = x;
      v.radius = r + 1;
      v.sizes = {kappas[r], found};
      v.detail = "ball of '" + bs.point_name(x) + "' at radius '" +
                 bs.radius_name(r + 1) + "' splits into " + std::to_string(found) +
                 " blocks of radius '" + bs.radius_name(r) + "'; expected " +
                 std::to_string(kappas[r]);
      report.violation = std::move(v);
      return report;
    }
  }

  report.ok = true;
  report.profile.mu = mu;
  report.profile.kappas = std::move(kappas);
  return report;
}

BlockOrder canonical_block_order(std::vector<std::vector<std::size_t>> blocks,
                                 std::size_t x0) {
  std::size_t home = blocks.size();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::find(blocks[b].begin(), blocks[b].end(), x0) != blocks[b].end()) {
      home = b;
      break;
    }
  }
  if (home == blocks.size()) {
    throw ContractError("canonical_block_order: no block contains the base point");
  }

  BlockOrder order;
  order.blocks.push_back(std::move(blocks[home]));
  order.representatives.push_back(x0);
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(home));

  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<std::size_t>& lhs, const std::vector<std::size_t>& rhs) {
              return *std::min_element(lhs.begin(), lhs.end()) <
                     *std::min_element(rhs.begin(), rhs.end());
            });
  for (std::vector<std::size_t>& block : blocks) {
    order.representatives.push_back(*std::min_element(block.begin(), block.end()));
    order.blocks.push_back(std::move(block));
  }
  return order;
}

namespace {

// Fills the per-point coordinates for the block rooted at `root`. Level 0
// orders the block members with the root first; a higher level orders its
// sub-blocks canonically, stamps the level coordinate, and recurses.
void assign_coords(const BallStructure& bs, const std::vector<std::size_t>& block,
                   std::size_t level, std::size_t root,
                   std::vector<std::vector<std::size_t>>& coords) {
  if (level == 0) {
    std::vector<std::size_t> order(block.begin(), block.end());
    std::sort(order.begin(), order.end());
    std::erase(order, root);
    order.insert(order.begin(), root);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      coords[order[pos]][0] = pos;
    }
    return;
  }

  std::vector<std::vector<std::size_t>> children;
  IndexSet seen(bs.point_count());
  for (std::size_t member : block) {
    if (seen.contains(member)) {
      continue;
    }
    const IndexSet& child = bs.ball(member, level - 1);
    seen |= child;
    children.push_back(child.to_vector());
  }

  BlockOrder order = canonical_block_order(std::move(children), root);
  for (std::size_t j = 0; j < order.blocks.size(); ++j) {
    for (std::size_t member : order.blocks[j]) {
      coords[member][level] = j;
    }
    assign_coords(bs, order.blocks[j], level - 1, order.representatives[j], coords);
  }
}

}  // namespace

Decomposition decompose(const BallStructure& bs, std::size_t basepoint) {
  HomogeneityReport report = check_homogeneity(bs);
  if (!report.ok) {
    const std::string message = "decompose: homogeneity condition (" +
                                std::string(condition_label(report.violation->condition)) +
                                ") fails: " + report.violation->detail;
    throw HomogeneityError(message, std::move(report));
  }
  if (basepoint >= bs.point_count()) {
    throw InputError("decompose: basepoint index out of range");
  }

  const std::size_t n = bs.point_count();
  const std::size_t m = bs.radius_count();

  std::vector<std::vector<std::size_t>> coords(n, std::vector<std::size_t>(m, 0));
  std::vector<std::size_t> whole(n);
  for (std::size_t x = 0; x < n; ++x) {
    whole[x] = x;
  }
  assign_coords(bs, whole, m - 1, basepoint, coords);

  std::vector<PointedFactor> factors;
  factors.reserve(m);
  for (std::size_t size : report.profile.factor_sizes()) {
    factors.push_back(PointedFactor{size, 0});
  }

  Decomposition result{PointedFamily(std::move(factors)), Asymorphism{}};
  result.map.forward.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    result.map.forward[x] = result.family.index_of(coords[x]);
  }
  result.map.forward_bound.resize(m);
  result.map.backward_bound.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    result.map.forward_bound[r] = r;
    result.map.backward_bound[r] = r;
  }
  return result;
}

}  // namespace ballean
