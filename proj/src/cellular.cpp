#include "ballean/cellular.hpp"

#include <algorithm>
#include <queue>

#include "ballean/errors.hpp"

namespace ballean {

namespace {

// Symmetrized adjacency at one radius: adj[x] = B(x,a) union B*(x,a).
std::vector<IndexSet> symmetric_steps(const BallStructure& bs, std::size_t radius) {
  std::vector<IndexSet> adj(bs.point_count(), IndexSet(bs.point_count()));
  for (std::size_t x = 0; x < bs.point_count(); ++x) {
    adj[x] |= bs.ball(x, radius);
    bs.ball(x, radius).for_each([&](std::size_t y) { adj[y].insert(x); });
  }
  return adj;
}

}  // namespace

PathClosure PathClosure::compute(const BallStructure& base) {
  PathClosure closure(base);
  const std::size_t n = base.point_count();
  const std::size_t m = base.radius_count();
  closure.blocks_.resize(m);
  closure.block_sets_.resize(m);
  closure.block_of_.assign(m, std::vector<std::size_t>(n, IndexSet::npos));
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<IndexSet> adj = symmetric_steps(base, a);
    auto& block_of = closure.block_of_[a];
    for (std::size_t start = 0; start < n; ++start) {
      if (block_of[start] != IndexSet::npos) continue;
      std::size_t id = closure.blocks_[a].size();
      std::vector<std::size_t> members;
      std::queue<std::size_t> frontier;
      block_of[start] = id;
      frontier.push(start);
      while (!frontier.empty()) {
        std::size_t u = frontier.front();
        frontier.pop();
        members.push_back(u);
        adj[u].for_each([&](std::size_t v) {
          if (block_of[v] == IndexSet::npos) {
            block_of[v] = id;
            frontier.push(v);
          }
        });
      }
      std::sort(members.begin(), members.end());
      IndexSet block_set(n);
      for (std::size_t member : members) block_set.insert(member);
      closure.blocks_[a].push_back(std::move(members));
      closure.block_sets_[a].push_back(std::move(block_set));
    }
  }
  return closure;
}

const std::vector<std::vector<std::size_t>>& PathClosure::blocks(std::size_t radius) const {
  if (radius >= blocks_.size()) throw InputError("radius index out of range");
  return blocks_[radius];
}

std::size_t PathClosure::block_of(std::size_t radius, std::size_t point) const {
  if (radius >= block_of_.size()) throw InputError("radius index out of range");
  if (point >= block_of_[radius].size()) throw InputError("point index out of range");
  return block_of_[radius][point];
}

const IndexSet& PathClosure::closed_ball(std::size_t point, std::size_t radius) const {
  return block_sets_[radius][block_of(radius, point)];
}

IndexSet path_ball(const BallStructure& bs, std::size_t point, std::size_t radius) {
  if (point >= bs.point_count()) throw InputError("point index out of range");
  if (radius >= bs.radius_count()) throw InputError("radius index out of range");
  std::vector<IndexSet> adj = symmetric_steps(bs, radius);
  IndexSet visited(bs.point_count());
  std::queue<std::size_t> frontier;
  visited.insert(point);
  frontier.push(point);
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop();
    adj[u].for_each([&](std::size_t v) {
      if (!visited.contains(v)) {
        visited.insert(v);
        frontier.push(v);
      }
    });
  }
  return visited;
}

BallStructure path_closure(const BallStructure& bs) {
  PathClosure closure = PathClosure::compute(bs);
  std::vector<std::vector<IndexSet>> balls(bs.point_count());
  for (std::size_t x = 0; x < bs.point_count(); ++x) {
    balls[x].reserve(bs.radius_count());
    for (std::size_t a = 0; a < bs.radius_count(); ++a)
      balls[x].push_back(closure.closed_ball(x, a));
  }
  return BallStructure(bs.support(), bs.radii(), std::move(balls));
}

BallStructure cellularization(const BallStructure& bs) {
  AxiomReport report = validate(bs);
  if (!report.ok()) {
    std::string message = "cellularization of an invalid structure";
    for (const std::string& line : describe(report, bs)) message += "; " + line;
    throw InputError(message);
  }
  return path_closure(bs);
}

bool is_cellular(const BallStructure& bs) {
  PathClosure closure = PathClosure::compute(bs);
  for (std::size_t x = 0; x < bs.point_count(); ++x)
    for (std::size_t a = 0; a < bs.radius_count(); ++a)
      if (!(bs.ball(x, a) == closure.closed_ball(x, a))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> partition_at(const BallStructure& bs, std::size_t radius) {
  if (radius >= bs.radius_count()) throw InputError("radius index out of range");
  std::vector<IndexSet> adj = symmetric_steps(bs, radius);
  // Closed classes at this radius only, then the balls must match them.
  std::vector<std::size_t> block_of(bs.point_count(), IndexSet::npos);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t start = 0; start < bs.point_count(); ++start) {
    if (block_of[start] != IndexSet::npos) continue;
    std::size_t id = blocks.size();
    std::vector<std::size_t> members;
    std::queue<std::size_t> frontier;
    block_of[start] = id;
    frontier.push(start);
    while (!frontier.empty()) {
      std::size_t u = frontier.front();
      frontier.pop();
      members.push_back(u);
      adj[u].for_each([&](std::size_t v) {
        if (block_of[v] == IndexSet::npos) {
          block_of[v] = id;
          frontier.push(v);
        }
      });
    }
    std::sort(members.begin(), members.end());
    blocks.push_back(std::move(members));
  }
  for (std::size_t x = 0; x < bs.point_count(); ++x) {
    IndexSet block_set(bs.point_count());
    for (std::size_t member : blocks[block_of[x]]) block_set.insert(member);
    if (!(bs.ball(x, radius) == block_set)) {
      std::size_t off = bs.ball(x, radius).first_not_in(block_set);
      if (off == IndexSet::npos) off = block_set.first_not_in(bs.ball(x, radius));
      throw ContractError("not cellular at radius '" + bs.radius_name(radius) + "': ball of '" +
                          bs.point_name(x) + "' differs from its path component at '" +
                          bs.point_name(off) + "'");
    }
  }
  return blocks;
}

}  // namespace ballean
