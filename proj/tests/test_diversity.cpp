#include "divkit/diversity.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "divkit/errors.hpp"
#include "divkit/metric.hpp"
#include "support/test_support.hpp"

using namespace divkit;
using namespace divkit::testing;

namespace {

// Three mutually equidistant points at distance r.
TableMetric equidistant3(Rational r) {
  TableMetric m(3);
  m.set(0, 1, r);
  m.set(0, 2, r);
  m.set(1, 2, r);
  return m;
}

}  // namespace

TEST_CASE("diversity values on the cars table") {
  ElementTable cars = cars_table();
  UrelMetric d(cars);
  std::vector<ElementId> trio{0, 1, 2};
  CHECK(delta_sum(trio, d) == Rational(5, 16));
  CHECK(delta_min(trio, d) == Rational(1, 16));
  CHECK(delta_sum_min(trio, d) == Rational(1, 4));
  CHECK(delta_weitzman_exact(trio, d) == Rational(3, 16));

  auto all = all_elements(6);
  CHECK(delta_weitzman_exact(all, d) == Rational(17, 16));
  UltrametricTree t = build_ultrametric_tree(all, d);
  CHECK(delta_weitzman_ultrametric(t) == Rational(17, 16));
}

TEST_CASE("two-element conventions") {
  TableMetric m(2);
  m.set(0, 1, Rational(3, 4));
  std::vector<ElementId> pair{0, 1};
  CHECK(delta_sum(pair, m) == Rational(3, 4));
  CHECK(delta_min(pair, m) == Rational(3, 4));
  CHECK(delta_weitzman_exact(pair, m) == Rational(3, 4));
  // Sum of per-element nearest distances counts the pair twice.
  CHECK(delta_sum_min(pair, m) == Rational(3, 2));
}

TEST_CASE("singleton conventions") {
  TableMetric m(1);
  std::vector<ElementId> one{0};
  CHECK(delta_sum(one, m).is_zero());
  CHECK(delta_min(one, m).is_zero());
  CHECK(delta_sum_min(one, m).is_zero());
  CHECK(delta_weitzman_exact(one, m).is_zero());
}

TEST_CASE("equidistant triple") {
  TableMetric m = equidistant3(Rational(1, 4));
  std::vector<ElementId> s{0, 1, 2};
  CHECK(delta_sum(s, m) == Rational(3, 4));
  CHECK(delta_min(s, m) == Rational(1, 4));
  CHECK(delta_sum_min(s, m) == Rational(3, 4));   // 3r
  CHECK(delta_weitzman_exact(s, m) == Rational(1, 2));  // 2r
}

TEST_CASE("path metric recursion takes the best removal") {
  TableMetric m(3);
  m.set(0, 1, Rational(1));
  m.set(1, 2, Rational(1));
  m.set(0, 2, Rational(2));
  std::vector<ElementId> s{0, 1, 2};
  CHECK(delta_weitzman_exact(s, m) == Rational(3));
}

TEST_CASE("recursive diversity matches the removal-order oracle") {
  std::mt19937_64 rng(7301);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 2 + rng() % 6;
    auto m = random_bounded_metric(rng, n);
    auto ids = all_elements(n);
    CHECK(delta_weitzman_exact(ids, *m) == oracle_weitzman_orders(ids, *m));
  }
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 2 + rng() % 6;
    UltrametricInstance inst = random_ultrametric(rng, n);
    CHECK(delta_weitzman_exact(inst.elements, *inst.metric) ==
          oracle_weitzman_orders(inst.elements, *inst.metric));
  }
}

TEST_CASE("closed form over the ball tree matches the exact recursion") {
  std::mt19937_64 rng(7302);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + rng() % 13;
    UltrametricInstance inst = random_ultrametric(rng, n);
    CHECK(delta_weitzman_ultrametric(*inst.tree) ==
          delta_weitzman_exact(inst.elements, *inst.metric));
  }
}

TEST_CASE("on ultrametrics every removal achieves the recursion maximum") {
  std::mt19937_64 rng(7303);
  for (int i = 0; i < 25; ++i) {
    std::size_t n = 3 + rng() % 8;
    UltrametricInstance inst = random_ultrametric(rng, n);
    const auto& d = *inst.metric;
    Rational whole = delta_weitzman_exact(inst.elements, d);
    for (ElementId a : inst.elements) {
      std::vector<ElementId> rest;
      for (ElementId e : inst.elements) {
        if (e != a) rest.push_back(e);
      }
      Rational nearest = d.distance(a, rest[0]);
      for (ElementId e : rest) nearest = std::min(nearest, d.distance(a, e));
      CHECK(whole == delta_weitzman_exact(rest, d) + nearest);
    }
  }
}

TEST_CASE("exact recursion refuses oversized sets") {
  TableMetric m(21);
  for (ElementId a = 0; a < 21; ++a) {
    for (ElementId b = a + 1; b < 21; ++b) m.set(a, b, Rational(1));
  }
  auto ids = all_elements(21);
  CHECK_THROWS_AS(delta_weitzman_exact(ids, m), CapExceededError);
  // 20 removals, each contributing the shared distance 1.
  CHECK(delta_weitzman_exact(ids, m, 21) == Rational(20));
}

TEST_CASE("replacement witness values") {
  WitnessInstance w = weitzman_drop_instance();
  const auto& d = *w.metric;
  CHECK(delta_weitzman_exact(w.candidate, d) == Rational(5));
  CHECK(delta_weitzman_exact(w.replacement, d) == Rational(6));

  std::vector<ElementId> with_candidate = w.base;
  with_candidate.insert(with_candidate.end(), w.candidate.begin(), w.candidate.end());
  std::vector<ElementId> with_replacement = w.base;
  with_replacement.insert(with_replacement.end(), w.replacement.begin(), w.replacement.end());
  CHECK(delta_weitzman_exact(with_candidate, d) == Rational(12));
  CHECK(delta_weitzman_exact(with_replacement, d) == Rational(11));

  // The lists agree on every cross distance, so this is a drop under the
  // equal-distance replacement hypotheses.
  for (ElementId a : w.base) {
    for (std::size_t i = 0; i < w.candidate.size(); ++i) {
      CHECK(d.distance(a, w.candidate[i]) == d.distance(a, w.replacement[i]));
    }
  }
}

TEST_CASE("lookup by name") {
  CHECK(DiversityFunction::by_name("sum").kind == DiversityKind::Sum);
  CHECK(DiversityFunction::by_name("min").kind == DiversityKind::Min);
  CHECK(DiversityFunction::by_name("weitzman").kind == DiversityKind::Weitzman);
  CHECK(DiversityFunction::by_name("sum-min").kind == DiversityKind::SumMin);
  CHECK(DiversityFunction::by_name("sum").name() == "sum");
  CHECK(DiversityFunction::by_name("sum-min").name() == "sum-min");
  CHECK_THROWS_AS(DiversityFunction::by_name("coverage"), Error);
}

TEST_CASE("declared monotonicity properties") {
  DiversityFunction sum{DiversityKind::Sum};
  DiversityFunction min{DiversityKind::Min};
  DiversityFunction wz{DiversityKind::Weitzman};
  DiversityFunction sm{DiversityKind::SumMin};

  for (bool u : {false, true}) {
    CHECK(sum.subset_monotone(u));
    CHECK(sum.weakly_subset_monotone(u));
    CHECK(sum.weakly_monotone(u));
    CHECK(min.subset_monotone(u));
    CHECK(min.weakly_subset_monotone(u));
    CHECK(min.weakly_monotone(u));
    CHECK_FALSE(sm.subset_monotone(u));
  }
  CHECK_FALSE(wz.subset_monotone(false));
  CHECK(wz.subset_monotone(true));
  CHECK_FALSE(wz.weakly_subset_monotone(false));
  CHECK(wz.weakly_subset_monotone(true));
  CHECK_FALSE(wz.weakly_monotone(false));
  CHECK(wz.weakly_monotone(true));
  CHECK_FALSE(sm.weakly_subset_monotone(false));
  CHECK(sm.weakly_subset_monotone(true));
  CHECK_FALSE(sm.weakly_monotone(false));
  CHECK(sm.weakly_monotone(true));
}

TEST_CASE("evaluate and evaluate_pairs agree") {
  std::mt19937_64 rng(7304);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 2 + rng() % 6;
    auto m = random_bounded_metric(rng, n);
    auto ids = all_elements(n);
    PairDistanceFn pd = [&](std::size_t a, std::size_t b) {
      return m->distance(ids[a], ids[b]);
    };
    for (const char* name : {"sum", "min", "weitzman", "sum-min"}) {
      DiversityFunction f = DiversityFunction::by_name(name);
      CHECK(f.evaluate(ids, *m) == f.evaluate_pairs(n, pd));
    }
  }
}
