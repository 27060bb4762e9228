#include <cmath>

#include "doctest.h"
#include "fcip/error.hpp"
#include "fcip/mcdm.hpp"

using namespace fcip;
using namespace fcip::mcdm;

TEST_CASE("likert mean and standard error") {
  CHECK(standard_error({"x", {1, 1, 5, 5}}) == doctest::Approx(1.1547005383792515).epsilon(1e-12));
  const LikertResponses p1{"P1", {5, 5, 5, 5, 5, 5, 4, 5, 5, 5, 5, 5, 5, 5, 5}};
  CHECK(mean_score(p1) == doctest::Approx(4.933333333333334).epsilon(1e-12));
  CHECK(standard_error(p1) == doctest::Approx(0.06666666666666665).epsilon(1e-12));
  CHECK_THROWS_AS(validate(LikertResponses{"x", {0, 3}}), InputError);
  const ScoredParameter scored[] = {{"a", 3.0}, {"b", 2.99}, {"c", 4.2}};
  CHECK(screen_by_mean(scored) == std::vector<std::string>{"a", "c"});
}

TEST_CASE("fuzzy delphi aggregate and screen") {
  const auto scale = FuzzyLikertScale::standard();
  CHECK(scale(5).m == 1.0);
  CHECK(scale(3).l == 0.25);
  const Tfn ops[] = {scale(4), scale(5)};
  const auto w = fdm_aggregate(ops);
  CHECK(w.l == 0.5);
  CHECK(w.m == doctest::Approx(std::sqrt(0.75)));
  CHECK(w.u == 1.0);
  CHECK(defuzzify_centroid(make_tfn(0.3, 0.6, 0.9)) == doctest::Approx(0.6));
  CHECK_THROWS_AS(make_tfn(0.5, 0.4, 0.9), InputError);

  const ScoredParameter crisp[] = {{"P1", 0.83}, {"P2", 0.60}, {"P3", 0.59}, {"P4", 0.9}};
  const std::string excl[] = {"P4"};
  const auto r = fdm_screen(crisp, 0.6, excl);
  CHECK(r.retained == std::vector<std::string>{"P1", "P2"});
  CHECK(r.deleted == std::vector<std::string>{"P3", "P4"});
}

TEST_CASE("tfn arithmetic") {
  const auto a = make_tfn(1, 2, 3), b = make_tfn(2, 3, 4);
  const auto s = a + b;
  CHECK(s.l == 3);
  CHECK(s.u == 7);
  const auto p = a * b;
  CHECK(p.m == 6);
  const auto inv = inverse(make_tfn(2, 4, 5));
  CHECK(inv.l == 0.2);
  CHECK(inv.u == 0.5);
}

TEST_CASE("consistency ratio of a crisp matrix") {
  Eigen::Matrix3d a;
  a << 1, 3, 1.0 / 5, 1.0 / 3, 1, 7, 5, 1.0 / 7, 1;
  const auto c = consistency(Eigen::MatrixXd(a));
  CHECK(c.lambda_max == doctest::Approx(5.929661946906192).epsilon(1e-9));
  CHECK(c.cr == doctest::Approx(2.5255706438846484).epsilon(1e-9));
  CHECK(random_index(3) == 0.58);
  CHECK(consistency(Eigen::MatrixXd(Eigen::Matrix3d::Ones())).cr == doctest::Approx(0).scale(1));
}

TEST_CASE("fuzzy pairwise matrix, extents and weights") {
  const auto m = FuzzyPairwiseMatrix::from_upper(
      {"C", "M", "E"}, {{make_tfn(1.73, 3.87, 5.92), make_tfn(3.87, 5.92, 7.94)}, {make_tfn(1.00, 1.73, 3.87)}});
  CHECK(m(1, 0).u == doctest::Approx(1 / 1.73));
  CHECK(m(2, 2).m == 1);
  const auto ext = synthetic_extents(m);
  REQUIRE(ext.size() == 3);
  double ml = 0;
  for (const auto& e : ext) ml += e.value.m;
  CHECK(ml == doctest::Approx(1.0).epsilon(1e-9));
  const auto w = fahp_weights(ext);
  double sum = 0;
  for (double v : w.normalized) sum += v;
  CHECK(sum == doctest::Approx(1.0));
  CHECK(w.normalized[0] > w.normalized[1]);
  CHECK(degree_of_possibility(make_tfn(2, 3, 4), make_tfn(1, 2, 3)) == 1.0);
  CHECK(degree_of_possibility(make_tfn(1, 2, 3), make_tfn(2, 3, 4)) == doctest::Approx(0.5));
  CHECK(degree_of_possibility(make_tfn(0, 1, 2), make_tfn(3, 4, 5)) == 0.0);
}

TEST_CASE("consistency of a fuzzy matrix uses upper centroids and their reciprocals") {
  const FuzzyPairwiseMatrix t({"C", "M", "E"},
                              {make_tfn(1, 1, 1), make_tfn(1.73, 3.87, 5.92), make_tfn(3.87, 5.92, 7.94),
                               make_tfn(0.20, 0.26, 0.58), make_tfn(1, 1, 1), make_tfn(1.00, 1.73, 3.87),
                               make_tfn(0.13, 0.17, 0.26), make_tfn(0.26, 0.58, 1.00), make_tfn(1, 1, 1)});
  const auto c = consistency(t);
  CHECK(c.lambda_max == doctest::Approx(3.0142003036431984).epsilon(1e-9));
  CHECK(c.cr == doctest::Approx(0.012241641071722719).epsilon(1e-9));
}

TEST_CASE("aggregation is the element-wise geometric mean") {
  const auto one = FuzzyPairwiseMatrix::from_upper({"A", "B"}, {{make_tfn(1, 2, 3)}});
  const auto two = FuzzyPairwiseMatrix::from_upper({"A", "B"}, {{make_tfn(4, 8, 12)}});
  const FuzzyPairwiseMatrix both[] = {one, two};
  const auto agg = fahp_aggregate(both);
  CHECK(agg(0, 1).l == doctest::Approx(2));
  CHECK(agg(0, 1).m == doctest::Approx(4));
  CHECK(agg(0, 1).u == doctest::Approx(6));
  const auto other = FuzzyPairwiseMatrix::from_upper({"A", "C"}, {{make_tfn(1, 2, 3)}});
  const FuzzyPairwiseMatrix mixed[] = {one, other};
  CHECK_THROWS_AS(fahp_aggregate(mixed), InputError);
}
