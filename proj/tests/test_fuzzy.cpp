#include <cmath>

#include "doctest.h"
#include "fcip/error.hpp"
#include "fcip/fuzzy.hpp"

using namespace fcip;
using namespace fcip::fuzzy;

namespace {

const Dataset& training() {
  static const Dataset ds = load_dataset(data_directory() / "training.csv", DatasetRole::training);
  return ds;
}

}  // namespace

TEST_CASE("membership shapes") {
  const auto tri = MembershipFunction::triangular(0, 2, 4);
  CHECK(tri(1) == 0.5);
  CHECK(tri(2) == 1);
  CHECK(tri(5) == 0);
  const auto trap = MembershipFunction::trapezoidal(0, 1, 3, 4);
  CHECK(trap(2) == 1);
  CHECK(trap(3.5) == 0.5);
  const auto g = MembershipFunction::gaussian(10, 2);
  CHECK(g(10) == 1);
  CHECK(g(12) == doctest::Approx(std::exp(-0.5)));
  CHECK_THROWS_AS(validate(MembershipFunction::triangular(3, 2, 4)), InputError);
}

TEST_CASE("level sets and alpha cuts") {
  const auto tri = MembershipFunction::triangular(0, 2, 4);
  const auto ls = level_sets(tri);
  CHECK(*ls.support == Interval{0, 4});
  CHECK(*ls.core == Interval{2, 2});
  CHECK(ls.crossovers == std::vector<double>{1, 3});
  CHECK(*alpha_cut(tri, 0.5) == Interval{1, 3});
  CHECK_FALSE(alpha_cut(tri, 1.5));
  const auto odd = MembershipFunction::triangular(0.1, 0.7, 2.3);
  CHECK(*alpha_cut(odd, 1.0) == *level_sets(odd).core);
  const auto g = level_sets(MembershipFunction::gaussian(0, 1));
  CHECK(g.crossovers[1] == doctest::Approx(std::sqrt(2 * std::log(2.0))));

  const auto set = FuzzySet::sample(tri, {0, 4, 401});
  const auto sampled = level_sets(set);
  CHECK(sampled.crossovers.size() == 2);
  CHECK(sampled.crossovers[0] == doctest::Approx(1.0));
  const auto cuts = alpha_cut(set, 0.5);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].lo == doctest::Approx(1.0));
}

TEST_CASE("set operations") {
  const Universe u{0, 10, 101};
  const auto a = FuzzySet::sample(MembershipFunction::triangular(0, 3, 6), u);
  const auto b = FuzzySet::sample(MembershipFunction::triangular(4, 7, 10), u);
  const auto i = combine(a, b, kernels::SetOp::intersect_min);
  CHECK(i.max() == doctest::Approx(1.0 / 3));
  const auto un = combine(a, b, kernels::SetOp::union_max);
  CHECK(un.max() == 1);
  const auto c = complement(a);
  CHECK(c.mu[30] == 0);
  CHECK_THROWS_AS(combine(a, FuzzySet::zero({0, 10, 11}), kernels::SetOp::union_max), InputError);
}

TEST_CASE("uniform triangular partitions sum to one") {
  const auto p = uniform_partition("x", 0, 60, 7, "a");
  CHECK(p.size() == 7);
  for (double x = 0; x <= 60; x += 0.37) {
    double s = 0;
    for (const auto& mf : p.sets) s += mf(x);
    CHECK(s == doctest::Approx(1.0));
  }
  CHECK(p.best_label(0) == 0);
  CHECK(p.best_label(60) == 6);
  CHECK_THROWS_AS(parse_partition_shape("bell"), InputError);
}

TEST_CASE("a single rule returns its consequent peak") {
  RuleBase base;
  base.inputs = {uniform_partition("x", 0, 10, 3, "x"), uniform_partition("y", 0, 10, 3, "y")};
  base.output = uniform_partition("z", 0, 100, 5, "z");
  base.rules = {{{1, 1}, 3, 1.0}};
  validate(base);
  const double in[] = {5, 5};
  CHECK(predict(base, in) == doctest::Approx(75));
  CHECK(predict(base, in, Defuzzifier::cog) == doctest::Approx(75).epsilon(1e-3));
  const double off[] = {0, 0};
  CHECK_THROWS_AS(predict(base, off), DomainError);
  const auto inf = infer(base, in);
  CHECK(inf.fired.size() == 1);
  CHECK(inf.fired[0].strength == 1.0);
}

TEST_CASE("wang-mendel rule count and subset evaluation") {
  const auto first80 = training().head(80);
  const auto parts = partitions_for(first80, 6);
  const auto wm = generate_rules_wm(first80, parts);
  CHECK(wm.size() == 57);
  std::vector<std::uint8_t> all(wm.size(), 1);
  const SubsetEvaluator eval(wm, first80);
  const auto direct = fitness(wm, first80);
  const auto fast = eval.evaluate(all);
  CHECK(fast.mape == doctest::Approx(direct.mape).epsilon(1e-12));
  CHECK(fast.rules == direct.rules);
  CHECK(wm.subset(all).size() == wm.size());
}

TEST_CASE("genetic selection is reproducible by seed") {
  const auto parts = partitions_for(training(), 5, 1001, PartitionShape::gaussian);
  const auto wm = generate_rules_wm(training(), parts);
  GaConfig cfg;
  cfg.population = 20;
  cfg.generations = 15;
  cfg.wm_hint = wm.size();
  const auto a = ga_select_rules(wm, training(), cfg);
  const auto b = ga_select_rules(wm, training(), cfg);
  CHECK(a.chromosome == b.chromosome);
  CHECK(a.history.size() == 16);
  for (std::size_t g = 1; g < a.history.size(); ++g) CHECK(a.history[g] >= a.history[g - 1]);
  CHECK(a.best.rules == a.base.size());
  cfg.population = 0;
  CHECK_THROWS_AS(validate(cfg), InputError);
}
