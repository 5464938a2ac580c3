#pragma once

#include <cstdint>
#include <vector>

#include "divkit/cq.hpp"
#include "divkit/database.hpp"
#include "divkit/join_tree.hpp"

namespace divkit {

using Row = std::vector<ValueId>;

// Private per-atom relation copies. rows[a] holds the surviving tuples of
// atom a in the database's row order.
struct AtomCopies {
  std::vector<std::vector<Row>> rows;
};

// Copies each atom's relation (missing relations are empty; a repeated
// variable inside an atom keeps only rows equal at those columns) and
// removes dangling tuples by sort-merge semijoins: one bottom-up and one
// top-down pass over the join tree. Afterwards every surviving tuple
// extends to a full answer. Throws PreconditionError when an atom arity
// disagrees with its stored relation.
AtomCopies yannakakis_reduce(const ConjunctiveQuery& q, const Database& db, const JoinTree& tree);

// One sort-merge semijoin: keeps the rows of target whose shared-variable
// values appear in source. Column positions are the first occurrence of
// each shared variable in the respective atom.
void semijoin(const ConjunctiveQuery& q, std::size_t target_atom, std::vector<Row>& target,
              std::size_t source_atom, const std::vector<Row>& source);

inline constexpr std::size_t kDefaultEvalCap = 1'000'000;

// Full answer set of an acyclic query: semijoin reduction, then
// backtracking over atoms in join-tree preorder, head projection and
// dedup. Answers are sorted by interned-string order, position by
// position. Throws PreconditionError on a cyclic query and
// CapExceededError when the answer count passes the cap.
std::vector<Row> evaluate_acq(const ConjunctiveQuery& q, const Database& db,
                              std::size_t cap = kDefaultEvalCap);

// Nested-loop oracle: tries every combination of one row per atom. Works
// on cyclic queries too; cap bounds the number of row combinations.
std::vector<Row> naive_join(const ConjunctiveQuery& q, const Database& db,
                            std::size_t cap = kDefaultEvalCap);

}  // namespace divkit
