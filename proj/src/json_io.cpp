#include "ballean/json_io.hpp"

#include <fstream>

#include "ballean/errors.hpp"

namespace ballean {

namespace {

void expect_keys(const Json& doc, const char* what,
                 std::initializer_list<const char*> keys) {
  if (!doc.is_object()) {
    throw InputError(std::string(what) + ": expected a JSON object");
  }
  for (const char* key : keys) {
    if (!doc.contains(key)) {
      throw InputError(std::string(what) + ": missing key \"" + key + "\"");
    }
  }
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* key : keys) {
      known = known || item.key() == key;
    }
    if (!known) {
      throw InputError(std::string(what) + ": unknown key \"" + item.key() + "\"");
    }
  }
}

std::vector<std::string> string_list(const Json& node, const std::string& what) {
  if (!node.is_array()) {
    throw InputError(what + ": expected an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(node.size());
  for (const Json& item : node) {
    if (!item.is_string()) {
      throw InputError(what + ": expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::size_t index_entry(const Json& node, const std::string& what) {
  if (!node.is_number_unsigned()) {
    throw InputError(what + ": expected a non-negative integer");
  }
  return node.get<std::size_t>();
}

std::vector<std::size_t> index_list(const Json& node, const std::string& what) {
  if (!node.is_array()) {
    throw InputError(what + ": expected an array of non-negative integers");
  }
  std::vector<std::size_t> out;
  out.reserve(node.size());
  for (const Json& item : node) {
    out.push_back(index_entry(item, what));
  }
  return out;
}

}  // namespace

BallStructure ball_structure_from_json(const Json& doc) {
  expect_keys(doc, "ball structure", {"support", "radii", "balls"});
  std::vector<std::string> support = string_list(doc["support"], "\"support\"");
  std::vector<std::string> radii = string_list(doc["radii"], "\"radii\"");

  // Name-to-index lookups; the BallStructure constructor re-checks duplicates,
  // but resolving members needs them here already.
  std::unordered_map<std::string, std::size_t> point_at;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!point_at.emplace(support[i], i).second) {
      throw InputError("\"support\" repeats the name \"" + support[i] + "\"");
    }
  }
  std::unordered_map<std::string, std::size_t> radius_at;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!radius_at.emplace(radii[i], i).second) {
      throw InputError("\"radii\" repeats the name \"" + radii[i] + "\"");
    }
  }

  const Json& balls_doc = doc["balls"];
  if (!balls_doc.is_object()) {
    throw InputError("\"balls\": expected an object keyed by point name");
  }
  std::vector<std::vector<IndexSet>> balls(
      support.size(), std::vector<IndexSet>(radii.size(), IndexSet(support.size())));
  std::vector<std::vector<bool>> given(support.size(),
                                       std::vector<bool>(radii.size(), false));
  for (const auto& point_item : balls_doc.items()) {
    auto point_it = point_at.find(point_item.key());
    if (point_it == point_at.end()) {
      throw InputError("\"balls\" names unknown point \"" + point_item.key() + "\"");
    }
    const std::size_t point = point_it->second;
    if (!point_item.value().is_object()) {
      throw InputError("\"balls\" entry for \"" + point_item.key() +
                       "\": expected an object keyed by radius name");
    }
    for (const auto& radius_item : point_item.value().items()) {
      auto radius_it = radius_at.find(radius_item.key());
      if (radius_it == radius_at.end()) {
        throw InputError("\"balls\" entry for \"" + point_item.key() +
                         "\" names unknown radius \"" + radius_item.key() + "\"");
      }
      const std::size_t radius = radius_it->second;
      const std::string what =
          "ball of \"" + point_item.key() + "\" at \"" + radius_item.key() + "\"";
      for (const std::string& member : string_list(radius_item.value(), what)) {
        auto member_it = point_at.find(member);
        if (member_it == point_at.end()) {
          throw InputError(what + " names unknown point \"" + member + "\"");
        }
        balls[point][radius].insert(member_it->second);
      }
      given[point][radius] = true;
    }
  }
  for (std::size_t point = 0; point < support.size(); ++point) {
    for (std::size_t radius = 0; radius < radii.size(); ++radius) {
      if (!given[point][radius]) {
        throw InputError("ball of \"" + support[point] + "\" at \"" + radii[radius] +
                         "\" is missing");
      }
    }
  }
  return BallStructure(std::move(support), std::move(radii), std::move(balls));
}

Json ball_structure_to_json(const BallStructure& bs) {
  Json balls = Json::object();
  for (std::size_t point = 0; point < bs.point_count(); ++point) {
    Json per_radius = Json::object();
    for (std::size_t radius = 0; radius < bs.radius_count(); ++radius) {
      Json members = Json::array();
      bs.ball(point, radius).for_each([&](std::size_t member) {
        members.push_back(bs.point_name(member));
      });
      per_radius[bs.radius_name(radius)] = std::move(members);
    }
    balls[bs.point_name(point)] = std::move(per_radius);
  }
  return Json{{"support", bs.support()}, {"radii", bs.radii()}, {"balls", std::move(balls)}};
}

FiniteMetricSpace metric_space_from_json(const Json& doc) {
  expect_keys(doc, "metric space", {"points", "dist"});
  std::vector<std::string> points = string_list(doc["points"], "\"points\"");
  const Json& dist_doc = doc["dist"];
  if (!dist_doc.is_array() || dist_doc.size() != points.size()) {
    throw InputError("\"dist\": expected one row per point");
  }
  std::vector<Rational> distances;
  distances.reserve(points.size() * points.size());
  for (std::size_t row = 0; row < dist_doc.size(); ++row) {
    const Json& row_doc = dist_doc[row];
    if (!row_doc.is_array() || row_doc.size() != points.size()) {
      throw InputError("\"dist\" row " + std::to_string(row) +
                       ": expected one entry per point");
    }
    for (const Json& cell : row_doc) {
      if (!cell.is_string()) {
        throw InputError("\"dist\" row " + std::to_string(row) +
                         ": distances are \"p/q\" strings");
      }
      distances.push_back(Rational::parse(cell.get<std::string>()));
    }
  }
  return FiniteMetricSpace(std::move(points), std::move(distances));
}

Json metric_space_to_json(const FiniteMetricSpace& space) {
  Json dist = Json::array();
  for (std::size_t row = 0; row < space.point_count(); ++row) {
    Json row_doc = Json::array();
    for (std::size_t col = 0; col < space.point_count(); ++col) {
      row_doc.push_back(space.distance(row, col).to_string());
    }
    dist.push_back(std::move(row_doc));
  }
  return Json{{"points", space.points()}, {"dist", std::move(dist)}};
}

PointedFamily pointed_family_from_json(const Json& doc) {
  expect_keys(doc, "pointed family", {"factors"});
  const Json& factors_doc = doc["factors"];
  if (!factors_doc.is_array()) {
    throw InputError("\"factors\": expected an array");
  }
  std::vector<PointedFactor> factors;
  factors.reserve(factors_doc.size());
  for (std::size_t i = 0; i < factors_doc.size(); ++i) {
    const std::string what = "\"factors\" entry " + std::to_string(i);
    expect_keys(factors_doc[i], what.c_str(), {"size", "basepoint"});
    factors.push_back(PointedFactor{index_entry(factors_doc[i]["size"], what + " \"size\""),
                                    index_entry(factors_doc[i]["basepoint"],
                                                what + " \"basepoint\"")});
  }
  return PointedFamily(std::move(factors));
}

Json pointed_family_to_json(const PointedFamily& family) {
  Json factors = Json::array();
  for (const PointedFactor& factor : family.factors()) {
    factors.push_back(Json{{"size", factor.size}, {"basepoint", factor.basepoint}});
  }
  return Json{{"factors", std::move(factors)}};
}

SubgroupChain subgroup_chain_from_json(const Json& doc) {
  expect_keys(doc, "subgroup chain", {"order", "table", "chain"});
  const std::size_t order = index_entry(doc["order"], "\"order\"");
  const Json& table_doc = doc["table"];
  if (!table_doc.is_array() || table_doc.size() != order) {
    throw InputError("\"table\": expected \"order\" rows");
  }
  std::vector<std::vector<std::size_t>> table;
  table.reserve(order);
  for (std::size_t row = 0; row < order; ++row) {
    table.push_back(index_list(table_doc[row], "\"table\" row " + std::to_string(row)));
    if (table.back().size() != order) {
      throw InputError("\"table\" row " + std::to_string(row) +
                       ": expected \"order\" entries");
    }
  }
  const Json& chain_doc = doc["chain"];
  if (!chain_doc.is_array()) {
    throw InputError("\"chain\": expected an array of element-index arrays");
  }
  std::vector<std::vector<std::size_t>> chain;
  chain.reserve(chain_doc.size());
  for (std::size_t level = 0; level < chain_doc.size(); ++level) {
    chain.push_back(index_list(chain_doc[level], "\"chain\" level " + std::to_string(level)));
  }
  return SubgroupChain{FiniteGroup(std::move(table)), std::move(chain)};
}

Json subgroup_chain_to_json(const SubgroupChain& sc) {
  return Json{{"order", sc.group.order()},
              {"table", sc.group.table()},
              {"chain", sc.chain}};
}

Json axiom_report_to_json(const AxiomReport& report, const BallStructure& bs) {
  Json containment{{"ok", report.containment_ok}};
  if (report.containment_violation) {
    containment["point"] = bs.point_name(report.containment_violation->point);
    containment["radius"] = bs.radius_name(report.containment_violation->radius);
  }

  Json symmetry{{"ok", report.symmetry_ok}};
  if (report.symmetry_ok) {
    Json ball_in_dual = Json::object();
    Json dual_in_ball = Json::object();
    for (std::size_t r = 0; r < bs.radius_count(); ++r) {
      ball_in_dual[bs.radius_name(r)] = bs.radius_name(report.ball_in_dual[r]);
      dual_in_ball[bs.radius_name(r)] = bs.radius_name(report.dual_in_ball[r]);
    }
    symmetry["ball_in_dual"] = std::move(ball_in_dual);
    symmetry["dual_in_ball"] = std::move(dual_in_ball);
  } else {
    const SymmetryViolation& v = *report.symmetry_violation;
    symmetry["direction"] = v.dual_direction ? "dual-in-ball" : "ball-in-dual";
    symmetry["point"] = bs.point_name(v.point);
    symmetry["radius"] = bs.radius_name(v.radius);
    symmetry["escapee"] = bs.point_name(v.escapee);
  }

  Json composition{{"ok", report.composition_ok}};
  if (report.composition_ok) {
    Json bounds = Json::object();
    for (std::size_t a = 0; a < bs.radius_count(); ++a) {
      Json inner = Json::object();
      for (std::size_t b = 0; b < bs.radius_count(); ++b) {
        inner[bs.radius_name(b)] = bs.radius_name(report.composition[a][b]);
      }
      bounds[bs.radius_name(a)] = std::move(inner);
    }
    composition["bounds"] = std::move(bounds);
  } else {
    const CompositionViolation& v = *report.composition_violation;
    composition["radius_inner"] = bs.radius_name(v.radius_inner);
    composition["radius_outer"] = bs.radius_name(v.radius_outer);
    composition["point"] = bs.point_name(v.point);
    composition["escapee"] = bs.point_name(v.escapee);
  }

  return Json{{"ok", report.ok()},
              {"containment", std::move(containment)},
              {"symmetry", std::move(symmetry)},
              {"composition", std::move(composition)}};
}

Json branching_profile_to_json(const BranchingProfile& profile) {
  return Json{{"mu", profile.mu}, {"kappas", profile.kappas}};
}

Json homogeneity_report_to_json(const HomogeneityReport& report, const BallStructure& bs) {
  Json doc{{"ok", report.ok}};
  if (report.ok) {
    doc["profile"] = branching_profile_to_json(report.profile);
  } else {
    const HomogeneityViolation& v = *report.violation;
    Json violation{{"condition", condition_label(v.condition)},
                   {"point", bs.point_name(v.point)},
                   {"radius", bs.radius_name(v.radius)},
                   {"detail", v.detail}};
    if (!v.sizes.empty()) {
      violation["sizes"] = v.sizes;
    }
    doc["violation"] = std::move(violation);
  }
  return doc;
}

Json partition_to_json(const std::vector<std::vector<std::size_t>>& blocks,
                       const BallStructure& bs) {
  Json doc = Json::array();
  for (const std::vector<std::size_t>& block : blocks) {
    Json members = Json::array();
    for (std::size_t member : block) {
      members.push_back(bs.point_name(member));
    }
    doc.push_back(std::move(members));
  }
  return doc;
}

Json asymorphism_to_json(const Asymorphism& map, const BallStructure& source,
                         const BallStructure& target) {
  Json forward = Json::object();
  for (std::size_t point = 0; point < map.forward.size(); ++point) {
    forward[source.point_name(point)] = target.point_name(map.forward[point]);
  }
  Json forward_bound = Json::object();
  for (std::size_t r = 0; r < map.forward_bound.size(); ++r) {
    forward_bound[source.radius_name(r)] = target.radius_name(map.forward_bound[r]);
  }
  Json backward_bound = Json::object();
  for (std::size_t r = 0; r < map.backward_bound.size(); ++r) {
    backward_bound[target.radius_name(r)] = source.radius_name(map.backward_bound[r]);
  }
  return Json{{"map", std::move(forward)},
              {"forward_bound", std::move(forward_bound)},
              {"backward_bound", std::move(backward_bound)}};
}

Json decomposition_to_json(const Decomposition& result, const BallStructure& bs) {
  BranchingProfile profile;
  profile.mu = result.family.factors().front().size;
  for (std::size_t i = 1; i < result.family.factor_count(); ++i) {
    profile.kappas.push_back(result.family.factors()[i].size);
  }
  Json map = Json::object();
  for (std::size_t point = 0; point < result.map.forward.size(); ++point) {
    map[bs.point_name(point)] = result.family.coords_of(result.map.forward[point]);
  }
  return Json{{"profile", branching_profile_to_json(profile)},
              {"factors", pointed_family_to_json(result.family)["factors"]},
              {"map", std::move(map)}};
}

Json ultrametrize_to_json(const UltrametrizeResult& result, const BallStructure& bs) {
  Json radius_distance = Json::object();
  for (std::size_t r = 0; r < result.radius_distance.size(); ++r) {
    radius_distance[bs.radius_name(r)] = result.radius_distance[r].to_string();
  }
  return Json{{"space", metric_space_to_json(result.space)},
              {"radius_distance", std::move(radius_distance)}};
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open file: " + path);
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw InputError(std::string("JSON parse error: ") + err.what());
  }
}

}  // namespace ballean
