#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ballean/ballcore.hpp"
#include "ballean/cellular.hpp"
#include "ballean/decompose.hpp"
#include "ballean/errors.hpp"
#include "ballean/groupball.hpp"
#include "ballean/json_io.hpp"
#include "ballean/metrics.hpp"
#include "ballean/product.hpp"

namespace {

// Every command prints one envelope: { diagnostics, payload, status } with
// status ok | contract-error | input-error | resource-error, mapped to exit
// codes 0 | 1 | 2 | 3.
constexpr int kOk = 0;
constexpr int kContractError = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

ballean::BallStructure load_structure(const std::string& path) {
  return ballean::ball_structure_from_json(ballean::parse_json_file(path));
}

ballean::SubgroupChain load_chain(const std::string& path) {
  return ballean::subgroup_chain_from_json(ballean::parse_json_file(path));
}

std::size_t resolve_point(const ballean::BallStructure& bs, const std::string& name) {
  if (name.empty()) {
    return 0;
  }
  if (auto index = bs.point_index(name)) {
    return *index;
  }
  throw ballean::InputError("unknown point: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ballean toolkit: axiom checking, cellularization, "
               "ultrametrization and product decomposition"};
  app.require_subcommand(1);

  std::size_t max_support = ballean::kDefaultMaxSupport;
  app.add_option("--max-support", max_support,
                 "largest support the tool will construct")
      ->capture_default_str();

  std::string validate_path;
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "check the ballean axioms of a ball structure");
  cmd_validate->add_option("path", validate_path, "ball structure JSON file")
      ->required();

  std::string cellularize_path;
  CLI::App* cmd_cellularize = app.add_subcommand(
      "cellularize", "replace every ball by its path component");
  cmd_cellularize->add_option("path", cellularize_path, "ball structure JSON file")
      ->required();

  std::string partition_path;
  std::string partition_radius;
  CLI::App* cmd_partition =
      app.add_subcommand("partition", "list the blocks of one radius");
  cmd_partition->add_option("path", partition_path, "ball structure JSON file")
      ->required();
  cmd_partition->add_option("--radius", partition_radius, "radius name")->required();

  std::string ultrametrize_path;
  CLI::App* cmd_ultrametrize = app.add_subcommand(
      "ultrametrize", "read an ultrametric off a connected cellular structure");
  cmd_ultrametrize->add_option("path", ultrametrize_path, "ball structure JSON file")
      ->required();

  std::string decompose_path;
  std::string decompose_basepoint;
  bool decompose_dedup = false;
  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "map a homogeneous hierarchy onto its product of factors");
  cmd_decompose->add_option("path", decompose_path, "ball structure JSON file")
      ->required();
  cmd_decompose->add_option("--basepoint", decompose_basepoint,
                            "point sent to the all-basepoints tuple (default: first)");
  cmd_decompose->add_flag("--dedup-radii", decompose_dedup,
                          "drop radii whose balls repeat an earlier radius");

  std::string asymorph_path_g;
  std::string asymorph_path_h;
  CLI::App* cmd_asymorph = app.add_subcommand(
      "asymorph", "build a verified asymorphism between two group balleans");
  cmd_asymorph->add_option("left", asymorph_path_g, "subgroup chain JSON file")
      ->required();
  cmd_asymorph->add_option("right", asymorph_path_h, "subgroup chain JSON file")
      ->required();

  std::uint64_t gen_metric_seed = 0;
  std::size_t gen_metric_points = 0;
  std::size_t gen_metric_depth = 3;
  CLI::App* cmd_gen_ultrametric =
      app.add_subcommand("gen-ultrametric", "emit a seeded random ultrametric space");
  cmd_gen_ultrametric->add_option("--seed", gen_metric_seed, "generator seed")
      ->required();
  cmd_gen_ultrametric->add_option("--points", gen_metric_points, "number of points")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_gen_ultrametric->add_option("--depth", gen_metric_depth, "nesting depth")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::uint64_t gen_chain_seed = 0;
  std::size_t gen_chain_levels = 0;
  CLI::App* cmd_gen_chain =
      app.add_subcommand("gen-chain", "emit a seeded random subgroup chain");
  cmd_gen_chain->add_option("--seed", gen_chain_seed, "generator seed")->required();
  cmd_gen_chain->add_option("--levels", gen_chain_levels, "chain length")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::ParseError& err) {
    ballean::Json envelope{{"diagnostics", std::vector<std::string>{err.what()}},
                           {"payload", ballean::Json::object()},
                           {"status", "input-error"}};
    std::cout << envelope.dump(2) << "\n";
    return kInputError;
  }

  ballean::Json payload = ballean::Json::object();
  std::vector<std::string> diagnostics;
  std::string status = "ok";
  int code = kOk;

  try {
    if (app.got_subcommand(cmd_validate)) {
      const ballean::BallStructure bs = load_structure(validate_path);
      const ballean::AxiomReport report = ballean::validate(bs);
      payload = ballean::axiom_report_to_json(report, bs);
      if (!report.ok()) {
        diagnostics = ballean::describe(report, bs);
        status = "contract-error";
        code = kContractError;
      }
    } else if (app.got_subcommand(cmd_cellularize)) {
      const ballean::BallStructure bs = load_structure(cellularize_path);
      payload = ballean::ball_structure_to_json(ballean::cellularization(bs));
    } else if (app.got_subcommand(cmd_partition)) {
      const ballean::BallStructure bs = load_structure(partition_path);
      const auto radius = bs.radius_index(partition_radius);
      if (!radius) {
        throw ballean::InputError("unknown radius: " + partition_radius);
      }
      payload = ballean::partition_to_json(ballean::partition_at(bs, *radius), bs);
    } else if (app.got_subcommand(cmd_ultrametrize)) {
      const ballean::BallStructure bs = load_structure(ultrametrize_path);
      payload = ballean::ultrametrize_to_json(ballean::ultrametrize(bs), bs);
    } else if (app.got_subcommand(cmd_decompose)) {
      ballean::BallStructure bs = load_structure(decompose_path);
      if (decompose_dedup) {
        bs = ballean::dedup_radii(bs);
      }
      const std::size_t basepoint = resolve_point(bs, decompose_basepoint);
      try {
        const ballean::Decomposition result = ballean::decompose(bs, basepoint);
        const ballean::BallStructure product =
            ballean::build_product_ballean(result.family, max_support);
        const ballean::AsymorphismCheck check =
            ballean::verify_asymorphism(bs, product, result.map);
        if (!check.ok) {
          throw ballean::ContractError("decomposition failed re-verification");
        }
        payload = ballean::decomposition_to_json(result, bs);
      } catch (const ballean::HomogeneityError& err) {
        payload = ballean::homogeneity_report_to_json(err.report(), bs);
        throw;
      }
    } else if (app.got_subcommand(cmd_asymorph)) {
      const ballean::SubgroupChain left = load_chain(asymorph_path_g);
      const ballean::SubgroupChain right = load_chain(asymorph_path_h);
      try {
        const ballean::Asymorphism map = ballean::asymorphism_between(left, right);
        const ballean::BallStructure source = ballean::group_ballean(left);
        const ballean::BallStructure target = ballean::group_ballean(right);
        const ballean::AsymorphismCheck check =
            ballean::verify_asymorphism(source, target, map);
        if (!check.ok) {
          throw ballean::ContractError("asymorphism failed verification");
        }
        payload = ballean::asymorphism_to_json(map, source, target);
        payload["profile"] =
            ballean::branching_profile_to_json(ballean::chain_profile(left));
      } catch (const ballean::ProfileMismatchError& err) {
        payload = ballean::Json{
            {"left", ballean::branching_profile_to_json(err.left())},
            {"right", ballean::branching_profile_to_json(err.right())}};
        throw;
      }
    } else if (app.got_subcommand(cmd_gen_ultrametric)) {
      if (gen_metric_points > max_support) {
        throw ballean::ResourceError("requested space exceeds --max-support");
      }
      payload = ballean::metric_space_to_json(ballean::random_ultrametric(
          gen_metric_seed, gen_metric_points, gen_metric_depth));
    } else if (app.got_subcommand(cmd_gen_chain)) {
      payload = ballean::subgroup_chain_to_json(
          ballean::truncated_locally_finite(gen_chain_seed, gen_chain_levels));
    }
  } catch (const ballean::ResourceError& err) {
    diagnostics.push_back(err.what());
    status = "resource-error";
    code = kResourceError;
  } catch (const ballean::InputError& err) {
    diagnostics.push_back(err.what());
    status = "input-error";
    code = kInputError;
  } catch (const ballean::ContractError& err) {
    diagnostics.push_back(err.what());
    status = "contract-error";
    code = kContractError;
  } catch (const std::exception& err) {
    diagnostics.push_back(std::string("unexpected error: ") + err.what());
    status = "contract-error";
    code = kContractError;
  }

  ballean::Json envelope{
      {"diagnostics", diagnostics}, {"payload", payload}, {"status", status}};
  std::cout << envelope.dump(2) << "\n";
  return code;
}
