#pragma once

#include <span>

#include "divkit/diversity.hpp"
#include "divkit/ultrametric_tree.hpp"

namespace divkit {

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

struct Candidate {
  std::vector<ElementId> members;
  Rational value;
};
// Index i holds the best i-subset of the ball; sizes 0..min(k, |ball|).
using CandidateTable = std::vector<Candidate>;

struct ExplicitSolveResult {
  std::vector<ElementId> subset;  // ascending element ids
  Rational value;
};

// Exposes the per-ball candidate tables for invariant tests.
struct ExplicitDpDebug {
  UltrametricTree tree;
  std::vector<CandidateTable> tables;  // parallel to tree.nodes
};

// Bottom-up candidate-table DP over the ultrametric ball tree. Requires
// 2 <= k <= |elements|, an ultrametric oracle, and a diversity function that
// is at least weakly subset-monotone over ultrametrics. Split ties are
// broken toward the smallest left share.
ExplicitSolveResult solve_explicit_dp(std::span<const ElementId> elements, const MetricOracle& u,
                                      std::size_t k, const DiversityFunction& delta,
                                      ExplicitDpDebug* debug = nullptr);

// Enumerates every k-subset (lexicographic by ascending element id) and keeps
// the first maximizer. Works for any metric; refuses instances with more than
// `cap` subsets.
ExplicitSolveResult brute_force_oracle(std::span<const ElementId> elements, const MetricOracle& d,
                                       std::size_t k, const DiversityFunction& delta,
                                       std::size_t cap = kDefaultOracleCap);

}  // namespace divkit
