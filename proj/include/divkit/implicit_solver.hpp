#pragma once

#include <cstdint>
#include <vector>

#include "divkit/diversity.hpp"
#include "divkit/implicit_tree.hpp"

namespace divkit {

struct SolverStats {
  std::uint64_t delta_evaluations = 0;   // full from-scratch diversity evaluations
  std::uint64_t incremental_updates = 0; // constant-size Weitzman increments
  std::uint64_t balls_expanded = 0;
  std::uint64_t max_frontier = 0;
  std::uint64_t relevant_elements = 0;   // FPT candidate pool size
};

struct DiverseResult {
  std::vector<Solution> picks;  // in pick order
  Rational value;               // diversity of the full pick set
};

struct GreedyOptions {
  // Refuse diversity functions that are not subset-monotone on ultrametrics.
  bool require_subset_monotone = true;
  // Score Weitzman candidates by their distance to the picked set instead of
  // re-evaluating the whole set; exact on ultrametrics.
  bool weitzman_increment = true;
};

// Farthest-point style greedy over the implicit ball tree: keeps one live
// candidate per frontier ball, picks the argmax extension each round, and
// only expands a ball once its cursor is exhausted. Ties go to the ball
// discovered earliest. Exact for subset-monotone diversity functions.
DiverseResult greedy_diverse(ImplicitTreeHandle& handle, std::size_t k,
                             const DiversityFunction& delta, SolverStats* stats = nullptr,
                             const GreedyOptions& opts = {});

// Collects the candidate pool for the exact search: at most k children per
// ball, recursing with a budget that shrinks by the number of siblings kept.
// The pool has at most 2^k solutions and provably contains an optimum for
// weakly monotone diversity functions.
std::vector<Solution> relevant_solutions(ImplicitTreeHandle& handle, std::size_t k);

// Exact search over the relevant pool; fixed-parameter tractable in k.
DiverseResult fpt_diverse(ImplicitTreeHandle& handle, std::size_t k,
                          const DiversityFunction& delta, SolverStats* stats = nullptr);

}  // namespace divkit
