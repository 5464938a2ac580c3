#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "divkit/cq.hpp"

namespace divkit {

// Join tree over atom indices; running intersection holds: for every
// variable, the atoms containing it form a connected subtree.
struct JoinTree {
  std::vector<std::int32_t> parent;              // -1 at the root
  std::int32_t root = -1;
  std::vector<std::vector<std::int32_t>> children;
  std::vector<std::int32_t> removal_order;       // GYO ear order, root excluded
};

struct NotAcyclic {
  std::vector<std::int32_t> residue;  // irreducible atom indices
};

// GYO reduction with deterministic choices: the lowest-index ear is
// removed first, attached to its lowest-index witness.
std::variant<JoinTree, NotAcyclic> build_join_tree(const ConjunctiveQuery& q);

bool is_acyclic(const ConjunctiveQuery& q);

// True iff the body hypergraph plus one synthetic atom over the head
// variables is acyclic.
bool is_free_connex(const ConjunctiveQuery& q);

// First lexicographic 1-based head positions (i, j, k), i < j < k, where
// the variables at i and j are non-neighbors and the one at k neighbors
// both. Neighbor = co-occurrence in some atom.
std::optional<std::array<std::size_t, 3>> find_disruptive_trio(const ConjunctiveQuery& q);

// Independent check used by tests and assertions.
bool running_intersection_holds(const ConjunctiveQuery& q, const JoinTree& t);

}  // namespace divkit
