#include "ballean/ballcore.hpp"

#include <algorithm>
#include <unordered_set>

#include "ballean/errors.hpp"

namespace ballean {

BallStructure::BallStructure(std::vector<std::string> support, std::vector<std::string> radii,
                             std::vector<std::vector<IndexSet>> balls)
    : support_(std::move(support)), radii_(std::move(radii)), balls_(std::move(balls)) {
  if (support_.empty()) throw InputError("ball structure with empty support");
  if (radii_.empty()) throw InputError("ball structure with no radii");
  for (std::size_t i = 0; i < support_.size(); ++i) {
    auto [it, fresh] = point_lookup_.emplace(support_[i], i);
    if (!fresh) throw InputError("duplicate point name '" + support_[i] + "'");
  }
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    auto [it, fresh] = radius_lookup_.emplace(radii_[i], i);
    if (!fresh) throw InputError("duplicate radius name '" + radii_[i] + "'");
  }
  if (balls_.size() != support_.size())
    throw InputError("ball map does not cover every point");
  for (std::size_t x = 0; x < balls_.size(); ++x) {
    if (balls_[x].size() != radii_.size())
      throw InputError("ball map for point '" + support_[x] + "' does not cover every radius");
    for (const IndexSet& ball : balls_[x])
      if (ball.universe() != support_.size())
        throw InputError("ball for point '" + support_[x] + "' indexes the wrong universe");
  }
}

const std::string& BallStructure::point_name(std::size_t point) const {
  if (point >= support_.size()) throw InputError("point index out of range");
  return support_[point];
}

const std::string& BallStructure::radius_name(std::size_t radius) const {
  if (radius >= radii_.size()) throw InputError("radius index out of range");
  return radii_[radius];
}

std::optional<std::size_t> BallStructure::point_index(const std::string& name) const {
  auto it = point_lookup_.find(name);
  if (it == point_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BallStructure::radius_index(const std::string& name) const {
  auto it = radius_lookup_.find(name);
  if (it == radius_lookup_.end()) return std::nullopt;
  return it->second;
}

const IndexSet& BallStructure::ball(std::size_t point, std::size_t radius) const {
  if (point >= support_.size()) throw InputError("point index out of range");
  if (radius >= radii_.size()) throw InputError("radius index out of range");
  return balls_[point][radius];
}

IndexSet dual_ball(const BallStructure& bs, std::size_t point, std::size_t radius) {
  if (point >= bs.point_count()) throw InputError("point index out of range");
  IndexSet dual(bs.point_count());
  for (std::size_t y = 0; y < bs.point_count(); ++y)
    if (bs.ball(y, radius).contains(point)) dual.insert(y);
  return dual;
}

IndexSet set_ball(const BallStructure& bs, const IndexSet& points, std::size_t radius) {
  if (points.universe() != bs.point_count())
    throw InputError("point set indexes the wrong universe");
  IndexSet out(bs.point_count());
  points.for_each([&](std::size_t p) { out |= bs.ball(p, radius); });
  return out;
}

IndexSet set_dual_ball(const BallStructure& bs, const IndexSet& points, std::size_t radius) {
  if (points.universe() != bs.point_count())
    throw InputError("point set indexes the wrong universe");
  if (radius >= bs.radius_count()) throw InputError("radius index out of range");
  IndexSet out(bs.point_count());
  for (std::size_t y = 0; y < bs.point_count(); ++y) {
    // y lies in B*(p, radius) for some p in points iff B(y, radius) meets points.
    bool meets = false;
    bs.ball(y, radius).for_each([&](std::size_t p) {
      if (points.contains(p)) meets = true;
    });
    if (meets) out.insert(y);
  }
  return out;
}

namespace {

// All dual balls of one radius: duals[x] = B*(x, radius).
std::vector<IndexSet> duals_at(const BallStructure& bs, std::size_t radius) {
  std::vector<IndexSet> duals(bs.point_count(), IndexSet(bs.point_count()));
  for (std::size_t y = 0; y < bs.point_count(); ++y)
    bs.ball(y, radius).for_each([&](std::size_t x) { duals[x].insert(y); });
  return duals;
}

struct EscapePair {
  std::size_t point = IndexSet::npos;
  std::size_t escapee = IndexSet::npos;

  void consider(std::size_t x, std::size_t y) {
    if (x < point || (x == point && y < escapee)) {
      point = x;
      escapee = y;
    }
  }
};

}  // namespace

AxiomReport validate(const BallStructure& bs) {
  const std::size_t n = bs.point_count();
  const std::size_t m = bs.radius_count();
  AxiomReport report;

  for (std::size_t x = 0; x < n && report.containment_ok; ++x)
    for (std::size_t a = 0; a < m; ++a)
      if (!bs.ball(x, a).contains(x)) {
        report.containment_ok = false;
        report.containment_violation = ContainmentViolation{x, a};
        break;
      }

  std::vector<std::vector<IndexSet>> duals(m);
  for (std::size_t a = 0; a < m; ++a) duals[a] = duals_at(bs, a);

  // Symmetry: for each radius find the smallest uniform witness; when none
  // exists, report the lex-least escaping pair across all candidates.
  report.ball_in_dual.assign(m, AxiomReport::kNoWitness);
  report.dual_in_ball.assign(m, AxiomReport::kNoWitness);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t cand = 0; cand < m; ++cand) {
      bool holds = true;
      for (std::size_t x = 0; x < n && holds; ++x)
        holds = bs.ball(x, a).is_subset_of(duals[cand][x]);
      if (holds) {
        report.ball_in_dual[a] = cand;
        break;
      }
    }
    if (report.ball_in_dual[a] == AxiomReport::kNoWitness) {
      report.symmetry_ok = false;
      if (!report.symmetry_violation) {
        EscapePair best;
        for (std::size_t cand = 0; cand < m; ++cand)
          for (std::size_t x = 0; x < n; ++x) {
            std::size_t y = bs.ball(x, a).first_not_in(duals[cand][x]);
            if (y != IndexSet::npos) {
              best.consider(x, y);
              break;
            }
          }
        report.symmetry_violation = SymmetryViolation{false, best.point, a, best.escapee};
      }
    }
  }
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t cand = 0; cand < m; ++cand) {
      bool holds = true;
      for (std::size_t x = 0; x < n && holds; ++x)
        holds = duals[b][x].is_subset_of(bs.ball(x, cand));
      if (holds) {
        report.dual_in_ball[b] = cand;
        break;
      }
    }
    if (report.dual_in_ball[b] == AxiomReport::kNoWitness) {
      report.symmetry_ok = false;
      if (!report.symmetry_violation) {
        EscapePair best;
        for (std::size_t cand = 0; cand < m; ++cand)
          for (std::size_t x = 0; x < n; ++x) {
            std::size_t y = duals[b][x].first_not_in(bs.ball(x, cand));
            if (y != IndexSet::npos) {
              best.consider(x, y);
              break;
            }
          }
        report.symmetry_violation = SymmetryViolation{true, best.point, b, best.escapee};
      }
    }
  }

  report.composition.assign(m, std::vector<std::size_t>(m, AxiomReport::kNoWitness));
  std::vector<IndexSet> composed(n, IndexSet(n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x) composed[x] = set_ball(bs, bs.ball(x, a), b);
      for (std::size_t cand = 0; cand < m; ++cand) {
        bool holds = true;
        for (std::size_t x = 0; x < n && holds; ++x)
          holds = composed[x].is_subset_of(bs.ball(x, cand));
        if (holds) {
          report.composition[a][b] = cand;
          break;
        }
      }
      if (report.composition[a][b] == AxiomReport::kNoWitness) {
        report.composition_ok = false;
        if (!report.composition_violation) {
          EscapePair best;
          for (std::size_t cand = 0; cand < m; ++cand)
            for (std::size_t x = 0; x < n; ++x) {
              std::size_t y = composed[x].first_not_in(bs.ball(x, cand));
              if (y != IndexSet::npos) {
                best.consider(x, y);
                break;
              }
            }
          report.composition_violation = CompositionViolation{a, b, best.point, best.escapee};
        }
      }
    }

  return report;
}

std::vector<std::string> describe(const AxiomReport& report, const BallStructure& bs) {
  std::vector<std::string> lines;
  if (!report.containment_ok && report.containment_violation) {
    const auto& v = *report.containment_violation;
    lines.push_back("containment fails: point '" + bs.point_name(v.point) +
                    "' is outside its own ball at radius '" + bs.radius_name(v.radius) + "'");
  }
  if (!report.symmetry_ok && report.symmetry_violation) {
    const auto& v = *report.symmetry_violation;
    if (!v.dual_direction)
      lines.push_back("symmetry fails at radius '" + bs.radius_name(v.radius) + "': '" +
                      bs.point_name(v.escapee) + "' lies in the ball of '" +
                      bs.point_name(v.point) + "' but no radius returns the membership");
    else
      lines.push_back("symmetry fails at radius '" + bs.radius_name(v.radius) +
                      "': the dual ball of '" + bs.point_name(v.point) +
                      "' escapes every ball at '" + bs.point_name(v.escapee) + "'");
  }
  if (!report.composition_ok && report.composition_violation) {
    const auto& v = *report.composition_violation;
    lines.push_back("composition fails: B(B('" + bs.point_name(v.point) + "','" +
                    bs.radius_name(v.radius_inner) + "'),'" + bs.radius_name(v.radius_outer) +
                    "') is inside no single ball; escaping point '" + bs.point_name(v.escapee) +
                    "'");
  }
  return lines;
}

bool radii_leq(const BallStructure& bs, std::size_t lhs, std::size_t rhs) {
  if (lhs >= bs.radius_count() || rhs >= bs.radius_count())
    throw InputError("radius index out of range");
  for (std::size_t x = 0; x < bs.point_count(); ++x)
    if (!bs.ball(x, lhs).is_subset_of(bs.ball(x, rhs))) return false;
  return true;
}

Cofinality cofinality(const BallStructure& bs) {
  const std::size_t m = bs.radius_count();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = radii_leq(bs, i, j);

  // A minimum dominating set keeps exactly one radius per maximal equivalence
  // class: every radius sits below some maximal class, and nothing outside a
  // maximal class can dominate it.
  Cofinality out;
  for (std::size_t i = 0; i < m; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < m && !dominated; ++j) {
      if (j == i) continue;
      if (leq[i][j] && !leq[j][i]) dominated = true;           // strictly below j
      else if (leq[i][j] && leq[j][i] && j < i) dominated = true;  // equivalent, keep smallest
    }
    if (!dominated) out.radii.push_back(i);
  }
  out.count = out.radii.size();
  return out;
}

bool is_connected(const BallStructure& bs) {
  for (std::size_t x = 0; x < bs.point_count(); ++x) {
    IndexSet reach(bs.point_count());
    for (std::size_t a = 0; a < bs.radius_count(); ++a) reach |= bs.ball(x, a);
    if (reach.count() != bs.point_count()) return false;
  }
  return true;
}

AsymorphismCheck verify_asymorphism(const BallStructure& source, const BallStructure& target,
                                    const Asymorphism& map) {
  const std::size_t n = source.point_count();
  if (target.point_count() != n)
    throw InputError("asymorphism between supports of different sizes");
  if (map.forward.size() != n) throw InputError("forward map has the wrong length");
  std::vector<std::size_t> backward(n, IndexSet::npos);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t image = map.forward[x];
    if (image >= n) throw InputError("forward map image out of range");
    if (backward[image] != IndexSet::npos) throw InputError("forward map is not injective");
    backward[image] = x;
  }
  if (map.forward_bound.size() != source.radius_count())
    throw InputError("forward bound does not cover the source radii");
  for (std::size_t bound : map.forward_bound)
    if (bound >= target.radius_count()) throw InputError("forward bound out of range");
  if (map.backward_bound.size() != target.radius_count())
    throw InputError("backward bound does not cover the target radii");
  for (std::size_t bound : map.backward_bound)
    if (bound >= source.radius_count()) throw InputError("backward bound out of range");

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < source.radius_count(); ++a) {
      const IndexSet& image_ball = target.ball(map.forward[x], map.forward_bound[a]);
      std::size_t bad = IndexSet::npos;
      source.ball(x, a).for_each([&](std::size_t y) {
        if (bad == IndexSet::npos && !image_ball.contains(map.forward[y])) bad = y;
      });
      if (bad != IndexSet::npos)
        return {false, MappingViolation{false, x, a, bad}};
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t b = 0; b < target.radius_count(); ++b) {
      const IndexSet& image_ball = source.ball(backward[u], map.backward_bound[b]);
      std::size_t bad = IndexSet::npos;
      target.ball(u, b).for_each([&](std::size_t v) {
        if (bad == IndexSet::npos && !image_ball.contains(backward[v])) bad = v;
      });
      if (bad != IndexSet::npos)
        return {false, MappingViolation{true, u, b, bad}};
    }
  return {true, std::nullopt};
}

Asymorphism identity_asymorphism(const BallStructure& bs) {
  Asymorphism map;
  map.forward.resize(bs.point_count());
  for (std::size_t x = 0; x < bs.point_count(); ++x) map.forward[x] = x;
  map.forward_bound.resize(bs.radius_count());
  for (std::size_t a = 0; a < bs.radius_count(); ++a) map.forward_bound[a] = a;
  map.backward_bound = map.forward_bound;
  return map;
}

Asymorphism inverse(const Asymorphism& map) {
  Asymorphism out;
  out.forward.assign(map.forward.size(), 0);
  for (std::size_t x = 0; x < map.forward.size(); ++x) {
    if (map.forward[x] >= map.forward.size()) throw InputError("forward map image out of range");
    out.forward[map.forward[x]] = x;
  }
  out.forward_bound = map.backward_bound;
  out.backward_bound = map.forward_bound;
  return out;
}

Asymorphism compose(const Asymorphism& first, const Asymorphism& then) {
  if (first.forward.size() != then.forward.size())
    throw InputError("composed maps have different support sizes");
  Asymorphism out;
  out.forward.resize(first.forward.size());
  for (std::size_t x = 0; x < first.forward.size(); ++x) {
    std::size_t mid = first.forward[x];
    if (mid >= then.forward.size()) throw InputError("forward map image out of range");
    out.forward[x] = then.forward[mid];
  }
  out.forward_bound.resize(first.forward_bound.size());
  for (std::size_t a = 0; a < first.forward_bound.size(); ++a) {
    std::size_t mid = first.forward_bound[a];
    if (mid >= then.forward_bound.size()) throw InputError("forward bound out of range");
    out.forward_bound[a] = then.forward_bound[mid];
  }
  out.backward_bound.resize(then.backward_bound.size());
  for (std::size_t b = 0; b < then.backward_bound.size(); ++b) {
    std::size_t mid = then.backward_bound[b];
    if (mid >= first.backward_bound.size()) throw InputError("backward bound out of range");
    out.backward_bound[b] = first.backward_bound[mid];
  }
  return out;
}

BallStructure dedup_radii(const BallStructure& bs) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < bs.radius_count(); ++j) {
    bool duplicate = false;
    for (std::size_t i : keep) {
      bool same = true;
      for (std::size_t x = 0; x < bs.point_count() && same; ++x)
        same = bs.ball(x, i) == bs.ball(x, j);
      if (same) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) keep.push_back(j);
  }
  std::vector<std::string> radii;
  radii.reserve(keep.size());
  for (std::size_t i : keep) radii.push_back(bs.radius_name(i));
  std::vector<std::vector<IndexSet>> balls(bs.point_count());
  for (std::size_t x = 0; x < bs.point_count(); ++x) {
    balls[x].reserve(keep.size());
    for (std::size_t i : keep) balls[x].push_back(bs.ball(x, i));
  }
  return BallStructure(bs.support(), std::move(radii), std::move(balls));
}

}  // namespace ballean
