#include "ballean/metrics.hpp"

#include <vector>

#include "doctest.h"
#include "support.hpp"

#include "ballean/cellular.hpp"
#include "ballean/errors.hpp"
#include "ballean/rational.hpp"

using ballean::BallStructure;
using ballean::FiniteMetricSpace;
using ballean::Rational;
using testutil::make_structure;

namespace {

// 0 -- 1 -- 2 on a line, d = index gap.
FiniteMetricSpace collinear3() {
  return FiniteMetricSpace({"p0", "p1", "p2"},
                           {Rational(0), Rational(1), Rational(2),
                            Rational(1), Rational(0), Rational(1),
                            Rational(2), Rational(1), Rational(0)});
}

BallStructure six_point() {
  return make_structure({"p0", "p1", "p2", "p3", "p4", "p5"}, {"0", "1", "2"},
                        {{{0}, {0, 1}, {0, 1, 2, 3, 4, 5}},
                         {{1}, {0, 1}, {0, 1, 2, 3, 4, 5}},
                         {{2}, {2, 3}, {0, 1, 2, 3, 4, 5}},
                         {{3}, {2, 3}, {0, 1, 2, 3, 4, 5}},
                         {{4}, {4, 5}, {0, 1, 2, 3, 4, 5}},
                         {{5}, {4, 5}, {0, 1, 2, 3, 4, 5}}});
}

}  // namespace

TEST_CASE("rational arithmetic and text form") {
  CHECK(Rational(3, 6).to_string() == "1/2");
  CHECK(Rational(2).to_string() == "2");
  CHECK(Rational(-4, 8).to_string() == "-1/2");
  CHECK(Rational::parse("5/15") == Rational(1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/x"), ballean::InputError);
  CHECK_THROWS_AS(Rational::parse(""), ballean::InputError);
  CHECK_THROWS_AS(Rational(1, 0), ballean::InputError);
}

TEST_CASE("metric construction checks the metric laws") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"},
                                    {Rational(1), Rational(1), Rational(1), Rational(0)}),
                  ballean::InputError);  // nonzero diagonal
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"},
                                    {Rational(0), Rational(1), Rational(2), Rational(0)}),
                  ballean::InputError);  // asymmetric
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"},
                                    {Rational(0), Rational(0), Rational(0), Rational(0)}),
                  ballean::InputError);  // distinct points at distance zero
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"},
                                    {Rational(0), Rational(1), Rational(3),
                                     Rational(1), Rational(0), Rational(1),
                                     Rational(3), Rational(1), Rational(0)}),
                  ballean::InputError);  // 3 > 1 + 1
  const FiniteMetricSpace ok = collinear3();
  CHECK(ok.distance(0, 2) == Rational(2));
  CHECK(ok.point_name(1) == "p1");
}

TEST_CASE("metric_ballean has one radius per distance value") {
  const BallStructure bs = ballean::metric_ballean(collinear3());
  CHECK(bs.radii() == std::vector<std::string>{"0", "1", "2"});
  CHECK(bs.ball(0, 0).to_vector() == std::vector<std::size_t>{0});
  CHECK(bs.ball(0, 1).to_vector() == std::vector<std::size_t>{0, 1});
  CHECK(bs.ball(1, 1).to_vector() == std::vector<std::size_t>{0, 1, 2});
  CHECK(ballean::validate(bs).ok());
  // The middle point's unit ball overlaps both ends, so radius "1" is not
  // a partition.
  CHECK_FALSE(ballean::is_cellular(bs));

  const FiniteMetricSpace halves(
      {"a", "b"}, {Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)});
  CHECK(ballean::metric_ballean(halves).radii() ==
        std::vector<std::string>{"0", "1/2"});
}

TEST_CASE("is_ultrametric matches the brute-force check") {
  CHECK_FALSE(ballean::is_ultrametric(collinear3()));
  CHECK_FALSE(testutil::naive_ultrametric(collinear3()));
  const FiniteMetricSpace equilateral(
      {"a", "b", "c"},
      {Rational(0), Rational(1), Rational(1),
       Rational(1), Rational(0), Rational(1),
       Rational(1), Rational(1), Rational(0)});
  CHECK(ballean::is_ultrametric(equilateral));
  CHECK(testutil::naive_ultrametric(equilateral));
}

TEST_CASE("random_ultrametric is deterministic and ultrametric") {
  const FiniteMetricSpace a = ballean::random_ultrametric(11, 12, 3);
  const FiniteMetricSpace b = ballean::random_ultrametric(11, 12, 3);
  CHECK(a == b);
  CHECK(a.point_count() == 12);
  CHECK(ballean::is_ultrametric(a));
  CHECK(testutil::naive_ultrametric(a));
  CHECK(ballean::is_cellular(ballean::metric_ballean(a)));
  const FiniteMetricSpace c = ballean::random_ultrametric(12, 12, 3);
  CHECK_FALSE(a == c);
}

TEST_CASE("ultrametrize ranks the radii") {
  const BallStructure six = six_point();
  const ballean::UltrametrizeResult result = ballean::ultrametrize(six);
  CHECK(result.radius_distance ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  CHECK(result.space.distance(0, 0) == Rational(0));
  CHECK(result.space.distance(0, 1) == Rational(2));
  CHECK(result.space.distance(0, 2) == Rational(3));
  CHECK(result.space.distance(4, 5) == Rational(2));
  CHECK(ballean::is_ultrametric(result.space));

  const ballean::Asymorphism witness = ballean::ultrametrize_witness(six, result);
  const BallStructure image = ballean::metric_ballean(result.space);
  CHECK(ballean::verify_asymorphism(six, image, witness).ok);
}

TEST_CASE("ultrametrize uses distance 1 when unit blocks exist") {
  const BallStructure pairs = make_structure(
      {"a", "b", "c"}, {"0", "1"}, {{{0, 1}, {0, 1, 2}}, {{0, 1}, {0, 1, 2}}, {{2}, {0, 1, 2}}});
  const ballean::UltrametrizeResult result = ballean::ultrametrize(pairs);
  CHECK(result.radius_distance == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(result.space.distance(0, 1) == Rational(1));
  CHECK(result.space.distance(0, 2) == Rational(2));
  CHECK(result.space.distance(1, 2) == Rational(2));
}

TEST_CASE("ultrametrize rejects unsuitable structures") {
  // Non-cellular: the line metric's unit balls overlap without merging.
  std::vector<std::vector<std::vector<std::size_t>>> balls(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t r = 0; r < 4; ++r) {
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < 4; ++j) {
        const std::size_t gap = i < j ? j - i : i - j;
        if (gap <= r) members.push_back(j);
      }
      balls[i].push_back(members);
    }
  }
  const BallStructure line =
      make_structure({"p0", "p1", "p2", "p3"}, {"0", "1", "2", "3"}, balls);
  CHECK_THROWS_AS(ballean::ultrametrize(line), ballean::ContractError);

  // Disconnected: nothing ever reaches the other point.
  const BallStructure apart = make_structure({"a", "b"}, {"0"}, {{{0}}, {{1}}});
  CHECK_THROWS_AS(ballean::ultrametrize(apart), ballean::ContractError);
}
