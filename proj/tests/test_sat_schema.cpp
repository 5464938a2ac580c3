#include "divkit/sat_schema.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "divkit/errors.hpp"
#include "divkit/explicit_solver.hpp"
#include "divkit/implicit_solver.hpp"
#include "divkit/metric.hpp"
#include "support/test_support.hpp"

using namespace divkit;
using namespace divkit::testing;

namespace {

std::set<std::string> leaf_descriptions(ImplicitTreeHandle& h) {
  std::set<std::string> out;
  for (const Solution& s : enumerate_leaves(h, 10'000)) {
    out.insert(h.describe(s));
  }
  return out;
}

bool satisfiable(const BooleanFormula& f) {
  for (std::uint32_t a = 0; a < (1u << f.variable_count()); ++a) {
    if (f.eval(a)) return true;
  }
  return false;
}

// Maximum sum-min value over k-subsets of the materialized leaves, or
// nullopt when fewer than k leaves exist.
std::optional<Rational> max_sum_min(ImplicitTreeHandle& h, std::size_t k) {
  std::vector<Solution> leaves = enumerate_leaves(h, 10'000);
  if (leaves.size() < k) return std::nullopt;
  FnMetric d([&](ElementId a, ElementId b) { return h.distance(leaves[a], leaves[b]); });
  std::vector<ElementId> ids = all_elements(leaves.size());
  return brute_force_oracle(ids, d, k, DiversityFunction::by_name("sum-min")).value;
}

}  // namespace

TEST_CASE("formula parsing and evaluation") {
  BooleanFormula f = BooleanFormula::parse("(x1 | !x2) & x3");
  CHECK(f.variable_count() == 3);
  CHECK(f.eval(0b100));   // x3 and not x2
  CHECK(f.eval(0b101));
  CHECK_FALSE(f.eval(0b110));  // x2 without x1
  CHECK(f.eval(0b111));
  CHECK_FALSE(f.eval(0b001));  // no x3

  // Precedence: ! over & over |.
  BooleanFormula g = BooleanFormula::parse("x1 | x2 & x3");
  CHECK(g.eval(0b001));
  CHECK_FALSE(g.eval(0b010));
  CHECK(g.eval(0b110));
}

TEST_CASE("formula parse errors") {
  CHECK_THROWS_AS(BooleanFormula::parse(""), ParseError);
  CHECK_THROWS_AS(BooleanFormula::parse("x"), ParseError);
  CHECK_THROWS_AS(BooleanFormula::parse("x0"), ParseError);
  CHECK_THROWS_AS(BooleanFormula::parse("x1 &"), ParseError);
  CHECK_THROWS_AS(BooleanFormula::parse("(x1"), ParseError);
  CHECK_THROWS_AS(BooleanFormula::parse("x1 x2"), ParseError);
  CHECK_THROWS_AS(BooleanFormula::parse("y1"), ParseError);
}

TEST_CASE("schema refuses oversized variable counts") {
  CHECK_THROWS_AS(sat_schema_handle(BooleanFormula::parse("x21")), PreconditionError);
  CHECK(sat_schema_handle(BooleanFormula::parse("x20")) != nullptr);
}

TEST_CASE("assignment tree of a one-variable formula") {
  auto h = sat_schema_handle(BooleanFormula::parse("x1"));
  // All assignments plus one model copy for the satisfying one.
  CHECK(leaf_descriptions(*h) == std::set<std::string>{"f:0", "t:0", "t:1"});

  BallId root = h->root();
  CHECK_FALSE(h->singleton(root));
  // Root member extends with all-false values and the plain copy.
  CHECK(h->describe(h->member(root)) == "f:0");

  // Children: variable false before true.
  auto cursor = h->children(root);
  BallId f_ball = cursor->current();
  REQUIRE(cursor->next());
  BallId t_ball = cursor->current();
  CHECK_FALSE(cursor->next());
  CHECK(h->singleton(f_ball));   // x1=f is not a model, no copy
  CHECK_FALSE(h->singleton(t_ball));

  // The model ball splits into plain before model copy.
  auto tc = h->children(t_ball);
  Solution plain = h->member(tc->current());
  REQUIRE(tc->next());
  Solution model = h->member(tc->current());
  CHECK_FALSE(tc->next());
  CHECK(h->describe(plain) == "t:0");
  CHECK(h->describe(model) == "t:1");
  CHECK(h->distance(plain, model) == Rational(1, 3));   // agree on x1
  CHECK(h->distance(h->member(f_ball), plain) == Rational(1));  // differ at x1
}

TEST_CASE("assignment tree of a contradiction") {
  auto h = sat_schema_handle(BooleanFormula::parse("x1 & !x1"));
  CHECK(leaf_descriptions(*h) == std::set<std::string>{"f:0", "t:0"});
}

TEST_CASE("distances follow the longest agreed prefix") {
  auto h = sat_schema_handle(BooleanFormula::parse("x1 & x2 & x3"));
  std::vector<Solution> leaves = enumerate_leaves(*h, 100);
  REQUIRE(leaves.size() == 9);  // 8 assignments + 1 model copy
  for (const Solution& a : leaves) {
    for (const Solution& b : leaves) {
      if (a == b) {
        CHECK(h->distance(a, b).is_zero());
        continue;
      }
      // First differing coordinate of (x1, x2, x3, flag); an agreed prefix
      // of all three variables leaves only the flag to differ.
      unsigned agreed = 0;
      while (agreed < 3 && ((a[0] >> agreed) & 1) == ((b[0] >> agreed) & 1)) ++agreed;
      CHECK(h->distance(a, b) == Rational::inverse_pow(3, agreed));
    }
  }
}

TEST_CASE("criterion constants") {
  BooleanFormula f1 = BooleanFormula::parse("x1");
  CHECK(sat_schema_k(f1) == 3);
  CHECK(sat_schema_threshold(f1) == Rational(5, 3));
  BooleanFormula f2 = BooleanFormula::parse("x1 & x2");
  CHECK(sat_schema_k(f2) == 4);
  CHECK(sat_schema_threshold(f2) == Rational(14, 9));
  BooleanFormula f3 = BooleanFormula::parse("x1 & x2 & x3");
  CHECK(sat_schema_k(f3) == 5);
  CHECK(sat_schema_threshold(f3) == Rational(41, 27));
}

TEST_CASE("one-variable optimum hits the threshold exactly") {
  BooleanFormula f = BooleanFormula::parse("x1");
  auto h = sat_schema_handle(f);
  DiverseResult r = fpt_diverse(*h, sat_schema_k(f), DiversityFunction::by_name("sum-min"));
  CHECK(r.value == Rational(5, 3));
}

TEST_CASE("diversity threshold reached iff satisfiable") {
  const char* formulas[] = {
      "x1",
      "!x1",
      "x1 & !x1 & x2",
      "x1 | x2",
      "x1 & x2",
      "(x1 | x2) & !x1",
      "x1 & (x2 | x3)",
      "(x1 | !x2) & (x2 | x3) & !x1",
      "x1 & !x1 & (x2 | x3)",
      "(x1 | x2) & (!x1 | x3) & !x2 & !x3",
  };
  for (const char* text : formulas) {
    CAPTURE(text);
    BooleanFormula f = BooleanFormula::parse(text);
    auto h = sat_schema_handle(f);
    std::optional<Rational> best = max_sum_min(*h, sat_schema_k(f));
    bool sat = satisfiable(f);
    if (!best.has_value()) {
      // Fewer than k extended assignments can only happen without models.
      CHECK_FALSE(sat);
      continue;
    }
    CHECK((*best >= sat_schema_threshold(f)) == sat);

    // The exact solver over the implicit tree agrees with the materialized
    // optimum.
    auto h2 = sat_schema_handle(f);
    DiverseResult r = fpt_diverse(*h2, sat_schema_k(f), DiversityFunction::by_name("sum-min"));
    CHECK(r.value == *best);
  }
}

TEST_CASE("handle contract on the assignment schema") {
  auto h = sat_schema_handle(BooleanFormula::parse("(x1 | x2) & x3"));
  // member(B) == member(first child of B), recursively down the tree.
  std::vector<BallId> stack{h->root()};
  while (!stack.empty()) {
    BallId ball = stack.back();
    stack.pop_back();
    if (h->singleton(ball)) continue;
    Solution m = h->member(ball);
    auto cursor = h->children(ball);
    CHECK(h->member(cursor->current()) == m);
    stack.push_back(cursor->current());
    while (cursor->next()) stack.push_back(cursor->current());
  }
}
