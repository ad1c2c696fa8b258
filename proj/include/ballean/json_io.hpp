#ifndef BALLEAN_JSON_IO_HPP
#define BALLEAN_JSON_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "ballean/ballcore.hpp"
#include "ballean/decompose.hpp"
#include "ballean/groupball.hpp"
#include "ballean/metrics.hpp"
#include "ballean/product.hpp"

namespace ballean {

using Json = nlohmann::json;

// Parsers are strict: wrong types, missing keys and unknown keys are
// InputErrors that name the offending key. Serializers emit the canonical
// form (members listed ascending by index) so parse-serialize-parse is the
// identity.

// { "support": [names], "radii": [names],
//   "balls": { "<point>": { "<radius>": [names] } } }
BallStructure ball_structure_from_json(const Json& doc);
Json ball_structure_to_json(const BallStructure& bs);

// { "points": [names], "dist": [[rationals as "p/q" strings, row-major]] }
FiniteMetricSpace metric_space_from_json(const Json& doc);
Json metric_space_to_json(const FiniteMetricSpace& space);

// { "factors": [ { "size": k, "basepoint": i } ] }
PointedFamily pointed_family_from_json(const Json& doc);
Json pointed_family_to_json(const PointedFamily& family);

// { "order": n, "table": [[element indices]], "chain": [[element indices]] }
SubgroupChain subgroup_chain_from_json(const Json& doc);
Json subgroup_chain_to_json(const SubgroupChain& sc);

// Report and result serializers; names come from the structures involved.
Json axiom_report_to_json(const AxiomReport& report, const BallStructure& bs);
Json branching_profile_to_json(const BranchingProfile& profile);
Json homogeneity_report_to_json(const HomogeneityReport& report, const BallStructure& bs);
Json partition_to_json(const std::vector<std::vector<std::size_t>>& blocks,
                       const BallStructure& bs);
Json asymorphism_to_json(const Asymorphism& map, const BallStructure& source,
                         const BallStructure& target);
Json decomposition_to_json(const Decomposition& result, const BallStructure& bs);
Json ultrametrize_to_json(const UltrametrizeResult& result, const BallStructure& bs);

// Reads and parses a whole file; parse failures become InputErrors carrying
// the parser's position message.
Json parse_json_file(const std::string& path);

}  // namespace ballean

#endif
