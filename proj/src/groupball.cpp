#include "ballean/groupball.hpp"

#include <algorithm>

#include "ballean/rng.hpp"

namespace ballean {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table)
    : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) {
    throw InputError("group with no elements");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) {
      throw InputError("group table is not square at row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j] >= n) {
        throw InputError("group table entry out of range at (" + std::to_string(i) +
                         ", " + std::to_string(j) + ")");
      }
    }
  }
}

std::size_t FiniteGroup::product(std::size_t a, std::size_t b) const {
  if (a >= order() || b >= order()) {
    throw InputError("group element index out of range");
  }
  return table_[a][b];
}

GroupCheck validate_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  GroupCheck check;

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> row_hit(n, n);
    std::vector<std::size_t> col_hit(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t rv = g.product(i, j);
      if (row_hit[rv] != n) {
        check.ok = false;
        check.witness = {i, row_hit[rv], j};
        check.detail = "row " + std::to_string(i) + " repeats entry " +
                       std::to_string(rv) + " at columns " + std::to_string(row_hit[rv]) +
                       " and " + std::to_string(j);
        return check;
      }
      row_hit[rv] = j;
      const std::size_t cv = g.product(j, i);
      if (col_hit[cv] != n) {
        check.ok = false;
        check.witness = {col_hit[cv], j, i};
        check.detail = "column " + std::to_string(i) + " repeats entry " +
                       std::to_string(cv) + " at rows " + std::to_string(col_hit[cv]) +
                       " and " + std::to_string(j);
        return check;
      }
      col_hit[cv] = j;
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (g.product(0, j) != j) {
      check.ok = false;
      check.witness = {0, j};
      check.detail = "element 0 is not a left identity: 0 * " + std::to_string(j) +
                     " = " + std::to_string(g.product(0, j));
      return check;
    }
    if (g.product(j, 0) != j) {
      check.ok = false;
      check.witness = {j, 0};
      check.detail = "element 0 is not a right identity: " + std::to_string(j) +
                     " * 0 = " + std::to_string(g.product(j, 0));
      return check;
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c))) {
          check.ok = false;
          check.witness = {a, b, c};
          check.detail = "associativity fails on (" + std::to_string(a) + ", " +
                         std::to_string(b) + ", " + std::to_string(c) + ")";
          return check;
        }
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      found = g.product(a, b) == 0 && g.product(b, a) == 0;
    }
    if (!found) {
      check.ok = false;
      check.witness = {a};
      check.detail = "element " + std::to_string(a) + " has no inverse";
      return check;
    }
  }

  return check;
}

namespace {

std::string element_list(const std::vector<std::size_t>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i != 0) out += ", ";
    out += "g" + std::to_string(elements[i]);
  }
  out += "}";
  return out;
}

}  // namespace

std::optional<std::string> chain_violation(const SubgroupChain& sc) {
  const GroupCheck group_check = validate_group(sc.group);
  if (!group_check.ok) {
    return "group table: " + group_check.detail;
  }
  const std::size_t n = sc.group.order();
  if (sc.chain.empty()) {
    return "chain has no levels";
  }

  std::vector<IndexSet> levels;
  levels.reserve(sc.chain.size());
  for (std::size_t k = 0; k < sc.chain.size(); ++k) {
    const std::string where = "level " + std::to_string(k);
    IndexSet members(n);
    for (std::size_t e : sc.chain[k]) {
      if (e >= n) {
        return where + " names element " + std::to_string(e) + " outside the group";
      }
      if (members.contains(e)) {
        return where + " repeats element g" + std::to_string(e);
      }
      members.insert(e);
    }
    if (!members.contains(0)) {
      return where + " does not contain the identity";
    }
    for (std::size_t a : sc.chain[k]) {
      for (std::size_t b : sc.chain[k]) {
        const std::size_t ab = sc.group.product(a, b);
        if (!members.contains(ab)) {
          return where + " is not closed under the product: g" + std::to_string(a) +
                 " * g" + std::to_string(b) + " = g" + std::to_string(ab) +
                 " is outside " + element_list(sc.chain[k]);
        }
      }
    }
    // With closure, identity and finiteness, inverses are the leftover
    // witnesses only when the table itself is broken; still checked so the
    // message names the element rather than a downstream symptom.
    for (std::size_t a : sc.chain[k]) {
      bool found = false;
      for (std::size_t b : sc.chain[k]) {
        if (sc.group.product(a, b) == 0) {
          found = true;
          break;
        }
      }
      if (!found) {
        return where + " is not closed under inverses at g" + std::to_string(a);
      }
    }
    if (!levels.empty()) {
      const IndexSet& previous = levels.back();
      const std::size_t outside = previous.first_not_in(members);
      if (outside != IndexSet::npos) {
        return where + " does not contain g" + std::to_string(outside) +
               " from the level below";
      }
      if (members.count() == previous.count()) {
        return where + " equals the level below";
      }
    }
    levels.push_back(std::move(members));
  }
  if (levels.back().count() != n) {
    return "last level is not the whole group: g" +
           std::to_string(IndexSet::full(n).first_not_in(levels.back())) + " is missing";
  }
  return std::nullopt;
}

BallStructure group_ballean(const SubgroupChain& sc) {
  if (auto why = chain_violation(sc)) {
    throw InputError("group ballean: " + *why);
  }
  const std::size_t n = sc.group.order();
  const std::size_t m = sc.chain.size();

  std::vector<std::string> support(n);
  for (std::size_t i = 0; i < n; ++i) {
    support[i] = "g" + std::to_string(i);
  }
  std::vector<std::string> radii(m);
  for (std::size_t k = 0; k < m; ++k) {
    radii[k] = std::to_string(k);
  }

  std::vector<std::vector<IndexSet>> balls(n, std::vector<IndexSet>(m, IndexSet(n)));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t h : sc.chain[k]) {
        balls[g][k].insert(sc.group.product(g, h));
      }
    }
  }
  return BallStructure(std::move(support), std::move(radii), std::move(balls));
}

BranchingProfile chain_profile(const SubgroupChain& sc) {
  if (auto why = chain_violation(sc)) {
    throw InputError("chain profile: " + *why);
  }
  BranchingProfile profile;
  profile.mu = sc.chain.front().size();
  for (std::size_t k = 0; k + 1 < sc.chain.size(); ++k) {
    profile.kappas.push_back(sc.chain[k + 1].size() / sc.chain[k].size());
  }
  return profile;
}

std::string profile_string(const BranchingProfile& profile) {
  std::string out = "mu=" + std::to_string(profile.mu) + ", kappas=[";
  for (std::size_t i = 0; i < profile.kappas.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(profile.kappas[i]);
  }
  out += "]";
  return out;
}

ProfileMismatchError::ProfileMismatchError(BranchingProfile left, BranchingProfile right)
    : ContractError("profiles differ: (" + profile_string(left) + ") vs (" +
                    profile_string(right) + ")"),
      left_(std::move(left)),
      right_(std::move(right)) {}

Asymorphism asymorphism_between(const SubgroupChain& scG, const SubgroupChain& scH) {
  const BranchingProfile pg = chain_profile(scG);
  const BranchingProfile ph = chain_profile(scH);
  if (!(pg == ph)) {
    throw ProfileMismatchError(pg, ph);
  }
  const Decomposition dg = decompose(group_ballean(scG), 0);
  const Decomposition dh = decompose(group_ballean(scH), 0);
  return compose(dg.map, inverse(dh.map));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) {
    throw InputError("cyclic group of order 0");
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = (i + j) % n;
    }
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup direct_sum(const std::vector<FiniteGroup>& groups) {
  if (groups.empty()) {
    throw InputError("direct sum of no groups");
  }
  std::size_t n = 1;
  for (const FiniteGroup& g : groups) {
    n *= g.order();
  }

  auto decode = [&](std::size_t index) {
    std::vector<std::size_t> tuple(groups.size());
    for (std::size_t p = 0; p < groups.size(); ++p) {
      tuple[p] = index % groups[p].order();
      index /= groups[p].order();
    }
    return tuple;
  };
  auto encode = [&](const std::vector<std::size_t>& tuple) {
    std::size_t index = 0;
    for (std::size_t p = groups.size(); p-- > 0;) {
      index = index * groups[p].order() + tuple[p];
    }
    return index;
  };

  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<std::size_t> a = decode(i);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> b = decode(j);
      for (std::size_t p = 0; p < groups.size(); ++p) {
        b[p] = groups[p].product(a[p], b[p]);
      }
      table[i][j] = encode(b);
    }
  }
  return FiniteGroup(std::move(table));
}

SubgroupChain chain_of_cyclic_levels(
    const std::vector<std::vector<std::size_t>>& levels) {
  if (levels.empty()) {
    throw InputError("chain with no levels");
  }
  std::vector<FiniteGroup> factors;
  std::vector<std::size_t> level_size(levels.size());
  std::size_t running = 1;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (std::size_t modulus : levels[k]) {
      if (modulus < 2) {
        throw InputError("cyclic factor modulus must be at least 2");
      }
      factors.push_back(cyclic_group(modulus));
      running *= modulus;
    }
    level_size[k] = running;
  }
  if (factors.empty()) {
    factors.push_back(cyclic_group(1));  // trivial group for an all-empty spec
  }

  // Coordinate-0-fastest encoding puts the subgroup on the first factors of
  // a prefix at the indices below the prefix size.
  FiniteGroup group = direct_sum(factors);
  std::vector<std::vector<std::size_t>> chain(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    chain[k].resize(level_size[k]);
    for (std::size_t e = 0; e < level_size[k]; ++e) {
      chain[k][e] = e;
    }
  }
  return SubgroupChain{std::move(group), std::move(chain)};
}

SubgroupChain truncated_locally_finite(std::uint64_t seed, std::size_t levels) {
  constexpr std::size_t kMaxOrder = 64;
  if (levels == 0) {
    throw InputError("chain needs at least one level");
  }
  if (levels > 7) {
    throw InputError("at most 7 levels fit under the order bound of 64");
  }

  SplitMix64 rng(seed);
  std::vector<std::vector<std::size_t>> spec(levels);
  std::size_t total = 1;
  for (std::size_t k = 0; k < levels; ++k) {
    // Leave room for a doubling at every remaining level.
    const std::size_t headroom = std::size_t{1} << (levels - 1 - k);
    const std::size_t cap = std::min<std::size_t>(4, kMaxOrder / (total * headroom));
    const std::size_t lo = k == 0 ? 1 : 2;
    const std::size_t index = rng.range(lo, std::max(lo, cap));
    total *= index;
    if (index == 4 && rng.below(2) == 1) {
      spec[k] = {2, 2};
    } else if (index > 1) {
      spec[k] = {index};
    }
  }
  return chain_of_cyclic_levels(spec);
}

}  // namespace ballean
