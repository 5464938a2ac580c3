#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "divkit/cq.hpp"
#include "divkit/database.hpp"
#include "divkit/implicit_solver.hpp"
#include "divkit/implicit_tree.hpp"
#include "divkit/yannakakis.hpp"

namespace divkit {

// Distance between two answers of one query: 2^-i where i is the first
// (1-based) head position where they differ; 0 when identical.
Rational answer_urel_distance(const Row& a, const Row& b);

// Implicit ball tree over the answer set of an acyclic query. Balls are
// maximal common answer prefixes (ids: the prefix value sequence);
// solutions are full answer rows. Children bind the next head position to
// each admissible value in ascending string order; binding re-runs the
// semijoin reduction outward from the atoms that contain the bound
// variable. member() repeatedly binds the first admissible value.
// Throws PreconditionError when the query is cyclic; root() throws when
// the answer set is empty.
std::unique_ptr<ImplicitTreeHandle> acq_prefix_tree(ConjunctiveQuery q, const Database& db);

// Same tree, computed from per-head-position lookup tables built once
// from the reduced atoms, so every root/children/member step costs
// O(arity) lookups and no relation copies. Requires an acyclic,
// free-connex query without repeated head variables or a disruptive
// trio; the thrown PreconditionError names the failed requirement.
std::unique_ptr<ImplicitTreeHandle> layered_prefix_tree(ConjunctiveQuery q, const Database& db);

struct LayeredEligibility {
  bool eligible = false;
  std::string reason;  // empty when eligible
};
// The layered preconditions as a value, for mode dispatch.
LayeredEligibility layered_eligibility(const ConjunctiveQuery& q);

// Weitzman k-diverse answers in bucket order: the greedy argmax over the
// frontier is served from an array of buckets indexed by prefix length,
// with no diversity evaluations at all. Pick order and value match
// greedy_diverse over the layered handle with the Weitzman function.
// Requires 1 < k <= number of answers. handle_stats, when given, receives
// the counters of the internally built layered handle.
DiverseResult weitzman_fast_acq(const ConjunctiveQuery& q, const Database& db, std::size_t k,
                                SolverStats* stats = nullptr,
                                HandleStats* handle_stats = nullptr);

}  // namespace divkit
