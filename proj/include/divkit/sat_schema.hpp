#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "divkit/implicit_tree.hpp"

namespace divkit {

// Propositional formula over variables x1..xn with ! & | and parentheses;
// ! binds tighter than &, which binds tighter than |. n is the largest
// index that occurs.
class BooleanFormula {
 public:
  static BooleanFormula parse(std::string_view text);

  unsigned variable_count() const { return n_; }
  const std::string& text() const { return text_; }
  // assignment bit i-1 holds the value of x_i.
  bool eval(std::uint32_t assignment) const;

 private:
  struct Node {
    enum class Kind { Var, Not, And, Or } kind;
    unsigned var = 0;           // Var
    std::int32_t lhs = -1, rhs = -1;
  };

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  unsigned n_ = 0;
  std::string text_;
};

// Implicit ball tree over all 2^n assignments plus one extra copy of every
// model of the formula, under the distance 3^-i where i is the length of
// the longest common prefix of (x1, .., xn, model-flag). With k = n + 2,
// the maximum sum-min diversity reaches the threshold below exactly when
// the formula is satisfiable, so this backend exercises solvers without
// ever enumerating the assignment set.
//
// Ball ids: {len, bits} is the set of extended assignments whose first len
// variables match bits; {n, bits, flag} is a single extended assignment.
// Children order: variable false before true, plain before model copy.
// member() extends with false values and the plain copy.
std::unique_ptr<ImplicitTreeHandle> sat_schema_handle(BooleanFormula formula);

// Largest n the schema accepts; distances use powers of 3 up to 3^(n+1).
inline constexpr unsigned kSatSchemaMaxVars = 20;

// k and threshold of the satisfiability criterion: with k = n + 2 the
// maximum sum-min diversity is at least (3 + 3^-n) / 2 iff the formula
// has a model.
std::size_t sat_schema_k(const BooleanFormula& formula);
Rational sat_schema_threshold(const BooleanFormula& formula);

}  // namespace divkit
