#ifndef BALLEAN_BALLCORE_HPP
#define BALLEAN_BALLCORE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ballean/index_set.hpp"

namespace ballean {

// A finite ball structure: a support of named points, a list of named radii,
// and a total ball map (point, radius) -> subset of the support, stored
// extensionally. Construction enforces shape only (non-empty support and
// radii, unique names, one ball per point/radius pair over the right
// universe). The ballean axioms are certified separately by validate(), so
// broken structures remain representable and reportable.
class BallStructure {
 public:
  BallStructure(std::vector<std::string> support, std::vector<std::string> radii,
                std::vector<std::vector<IndexSet>> balls);

  std::size_t point_count() const { return support_.size(); }
  std::size_t radius_count() const { return radii_.size(); }
  const std::vector<std::string>& support() const { return support_; }
  const std::vector<std::string>& radii() const { return radii_; }
  const std::string& point_name(std::size_t point) const;
  const std::string& radius_name(std::size_t radius) const;
  std::optional<std::size_t> point_index(const std::string& name) const;
  std::optional<std::size_t> radius_index(const std::string& name) const;

  // B(point, radius). Indices out of range raise InputError.
  const IndexSet& ball(std::size_t point, std::size_t radius) const;

  friend bool operator==(const BallStructure& lhs, const BallStructure& rhs) {
    return lhs.support_ == rhs.support_ && lhs.radii_ == rhs.radii_ && lhs.balls_ == rhs.balls_;
  }

 private:
  std::vector<std::string> support_;
  std::vector<std::string> radii_;
  std::vector<std::vector<IndexSet>> balls_;  // [point][radius]
  std::unordered_map<std::string, std::size_t> point_lookup_;
  std::unordered_map<std::string, std::size_t> radius_lookup_;
};

struct ContainmentViolation {
  std::size_t point = 0;
  std::size_t radius = 0;
};

struct SymmetryViolation {
  // false: some y in B(x, radius) has x outside B(y, r') for every radius r'.
  // true:  some y with x in B(y, radius) lies outside B(x, r') for every r'.
  bool dual_direction = false;
  std::size_t point = 0;
  std::size_t radius = 0;
  std::size_t escapee = 0;
};

struct CompositionViolation {
  std::size_t radius_inner = 0;  // first hop
  std::size_t radius_outer = 0;  // second hop
  std::size_t point = 0;
  std::size_t escapee = 0;  // member of B(B(x, inner), outer) outside every candidate ball
};

// Result of the exhaustive axiom check. Witness radii are uniform in the
// center: a recorded witness works for every point simultaneously, and the
// search always keeps the smallest index that does. A false flag carries the
// lexicographically smallest violating tuple.
struct AxiomReport {
  static constexpr std::size_t kNoWitness = static_cast<std::size_t>(-1);

  bool containment_ok = true;
  std::optional<ContainmentViolation> containment_violation;

  bool symmetry_ok = true;
  std::vector<std::size_t> ball_in_dual;  // per radius a: a' with B(x,a) within B*(x,a') for all x
  std::vector<std::size_t> dual_in_ball;  // per radius b: b' with B*(x,b) within B(x,b') for all x
  std::optional<SymmetryViolation> symmetry_violation;

  bool composition_ok = true;
  std::vector<std::vector<std::size_t>> composition;  // per (a,b): g with B(B(x,a),b) within B(x,g)
  std::optional<CompositionViolation> composition_violation;

  bool ok() const { return containment_ok && symmetry_ok && composition_ok; }
};

// One human-readable line per failed axiom; empty for a clean report.
std::vector<std::string> describe(const AxiomReport& report, const BallStructure& bs);

// Bijection between two supports plus radius bounds witnessing that ball
// images stay inside balls in both directions.
struct Asymorphism {
  std::vector<std::size_t> forward;         // source point -> target point
  std::vector<std::size_t> forward_bound;   // source radius -> target radius
  std::vector<std::size_t> backward_bound;  // target radius -> source radius
};

struct MappingViolation {
  bool backward = false;
  std::size_t point = 0;    // center, on the side being mapped from
  std::size_t radius = 0;
  std::size_t escapee = 0;  // ball member whose image escapes the bound ball
};

struct AsymorphismCheck {
  bool ok = true;
  std::optional<MappingViolation> violation;
};

// B*(point, radius) = { y : point in B(y, radius) }.
IndexSet dual_ball(const BallStructure& bs, std::size_t point, std::size_t radius);

// Union of B(p, radius) over p in points; the dual variant unions dual balls.
IndexSet set_ball(const BallStructure& bs, const IndexSet& points, std::size_t radius);
IndexSet set_dual_ball(const BallStructure& bs, const IndexSet& points, std::size_t radius);

// Exhaustive check of containment, symmetry and composition.
AxiomReport validate(const BallStructure& bs);

// Radii preorder: lhs <= rhs iff B(x, lhs) is contained in B(x, rhs) for all x.
bool radii_leq(const BallStructure& bs, std::size_t lhs, std::size_t rhs);

// Smallest dominating radius set: one representative per maximal equivalence
// class of the preorder (smallest index in its class), listed ascending.
struct Cofinality {
  std::size_t count = 0;
  std::vector<std::size_t> radii;
};
Cofinality cofinality(const BallStructure& bs);

// True iff every pair of points is joined by some ball around either of them.
bool is_connected(const BallStructure& bs);

// Checks that map.forward is a bijection (else InputError) and that both
// bound maps push every ball into the corresponding target ball. Scans points
// then radii and reports the first violation.
AsymorphismCheck verify_asymorphism(const BallStructure& source, const BallStructure& target,
                                    const Asymorphism& map);

Asymorphism identity_asymorphism(const BallStructure& bs);
Asymorphism inverse(const Asymorphism& map);
// first: A -> B, then: B -> C, result: A -> C with composed bounds.
Asymorphism compose(const Asymorphism& first, const Asymorphism& then);

// Drops every radius whose ball map duplicates an earlier radius exactly.
BallStructure dedup_radii(const BallStructure& bs);

}  // namespace ballean

#endif
