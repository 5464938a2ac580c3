#include "divkit/yannakakis.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "divkit/errors.hpp"

namespace divkit {

namespace {

// Raw per-atom rows: missing relations are empty, arities are checked.
std::vector<std::vector<Row>> raw_atom_rows(const ConjunctiveQuery& q, const Database& db) {
  std::vector<std::vector<Row>> rows;
  rows.reserve(q.atoms.size());
  for (const Atom& atom : q.atoms) {
    const Database::Relation* rel = db.find(atom.relation);
    if (rel == nullptr) {
      rows.emplace_back();
      continue;
    }
    if (rel->arity != atom.vars.size()) {
      throw PreconditionError("atom " + atom.relation + "/" + std::to_string(atom.vars.size()) +
                              " does not match the stored arity " + std::to_string(rel->arity));
    }
    rows.push_back(rel->rows);
  }
  return rows;
}

// Column positions of the variables shared by two atoms: first occurrence
// in each atom, ordered by ascending variable index.
void shared_columns(const ConjunctiveQuery& q, std::size_t a, std::size_t b,
                    std::vector<std::size_t>& cols_a, std::vector<std::size_t>& cols_b) {
  cols_a.clear();
  cols_b.clear();
  std::vector<std::uint32_t> vars_a = q.atom_vars[a];
  std::sort(vars_a.begin(), vars_a.end());
  vars_a.erase(std::unique(vars_a.begin(), vars_a.end()), vars_a.end());
  for (std::uint32_t v : vars_a) {
    std::size_t pos_b = q.atom_vars[b].size();
    for (std::size_t i = 0; i < q.atom_vars[b].size(); ++i) {
      if (q.atom_vars[b][i] == v) {
        pos_b = i;
        break;
      }
    }
    if (pos_b == q.atom_vars[b].size()) {
      continue;
    }
    for (std::size_t i = 0; i < q.atom_vars[a].size(); ++i) {
      if (q.atom_vars[a][i] == v) {
        cols_a.push_back(i);
        break;
      }
    }
    cols_b.push_back(pos_b);
  }
}

Row key_at(const Row& row, const std::vector<std::size_t>& cols) {
  Row key;
  key.reserve(cols.size());
  for (std::size_t c : cols) {
    key.push_back(row[c]);
  }
  return key;
}

// Atoms in BFS order from the root; parents precede children.
std::vector<std::size_t> top_down_order(const JoinTree& tree) {
  std::vector<std::size_t> order;
  order.push_back(static_cast<std::size_t>(tree.root));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::int32_t c : tree.children[order[i]]) {
      order.push_back(static_cast<std::size_t>(c));
    }
  }
  return order;
}

std::vector<Row> sorted_answers(std::set<Row>&& answers, const Database& db) {
  std::vector<Row> out(answers.begin(), answers.end());
  std::sort(out.begin(), out.end(),
            [&db](const Row& a, const Row& b) { return db.row_less(a, b); });
  return out;
}

}  // namespace

void semijoin(const ConjunctiveQuery& q, std::size_t target_atom, std::vector<Row>& target,
              std::size_t source_atom, const std::vector<Row>& source) {
  std::vector<std::size_t> cols_t, cols_s;
  shared_columns(q, target_atom, source_atom, cols_t, cols_s);
  if (cols_t.empty()) {
    // No shared variables: the target survives iff the source is non-empty.
    if (source.empty()) {
      target.clear();
    }
    return;
  }
  std::vector<Row> keys;
  keys.reserve(source.size());
  for (const Row& row : source) {
    keys.push_back(key_at(row, cols_s));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<Row> kept;
  kept.reserve(target.size());
  for (Row& row : target) {
    if (std::binary_search(keys.begin(), keys.end(), key_at(row, cols_t))) {
      kept.push_back(std::move(row));
    }
  }
  target = std::move(kept);
}

AtomCopies yannakakis_reduce(const ConjunctiveQuery& q, const Database& db,
                             const JoinTree& tree) {
  AtomCopies copies;
  copies.rows = raw_atom_rows(q, db);

  // Repeated variables inside an atom: keep rows equal at those columns.
  for (std::size_t a = 0; a < q.atoms.size(); ++a) {
    const auto& vars = q.atom_vars[a];
    bool repeats = false;
    for (std::size_t i = 0; i < vars.size() && !repeats; ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        if (vars[i] == vars[j]) {
          repeats = true;
          break;
        }
      }
    }
    if (!repeats) {
      continue;
    }
    std::vector<Row> kept;
    for (Row& row : copies.rows[a]) {
      bool ok = true;
      for (std::size_t i = 0; i < vars.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
          if (vars[i] == vars[j] && row[i] != row[j]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        kept.push_back(std::move(row));
      }
    }
    copies.rows[a] = std::move(kept);
  }

  const std::vector<std::size_t> order = top_down_order(tree);
  for (std::size_t i = order.size(); i-- > 0;) {
    const std::size_t a = order[i];
    const std::int32_t p = tree.parent[a];
    if (p >= 0) {
      semijoin(q, static_cast<std::size_t>(p), copies.rows[static_cast<std::size_t>(p)], a,
               copies.rows[a]);
    }
  }
  for (std::size_t a : order) {
    const std::int32_t p = tree.parent[a];
    if (p >= 0) {
      semijoin(q, a, copies.rows[a], static_cast<std::size_t>(p),
               copies.rows[static_cast<std::size_t>(p)]);
    }
  }
  return copies;
}

namespace {

struct Backtracker {
  const ConjunctiveQuery& q;
  const std::vector<std::vector<Row>>& rows;
  const std::vector<std::size_t>& order;
  std::size_t cap;
  std::vector<std::int64_t> binding;  // variable index -> value id or -1
  std::set<Row> answers;

  void run(std::size_t depth) {
    if (depth == order.size()) {
      Row answer;
      answer.reserve(q.head_var.size());
      for (std::uint32_t v : q.head_var) {
        answer.push_back(static_cast<ValueId>(binding[v]));
      }
      answers.insert(std::move(answer));
      if (answers.size() > cap) {
        throw CapExceededError("answer set exceeds the cap of " + std::to_string(cap) +
                               " tuples");
      }
      return;
    }
    const std::size_t a = order[depth];
    const auto& vars = q.atom_vars[a];
    for (const Row& row : rows[a]) {
      std::vector<std::uint32_t> bound_here;
      bool ok = true;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::uint32_t v = vars[i];
        if (binding[v] < 0) {
          binding[v] = row[i];
          bound_here.push_back(v);
        } else if (binding[v] != static_cast<std::int64_t>(row[i])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        run(depth + 1);
      }
      for (std::uint32_t v : bound_here) {
        binding[v] = -1;
      }
    }
  }
};

}  // namespace

std::vector<Row> evaluate_acq(const ConjunctiveQuery& q, const Database& db, std::size_t cap) {
  auto built = build_join_tree(q);
  if (!std::holds_alternative<JoinTree>(built)) {
    throw PreconditionError("the query is not acyclic");
  }
  const JoinTree& tree = std::get<JoinTree>(built);
  AtomCopies copies = yannakakis_reduce(q, db, tree);
  for (const auto& rows : copies.rows) {
    if (rows.empty()) {
      return {};
    }
  }
  const std::vector<std::size_t> order = top_down_order(tree);
  Backtracker bt{q, copies.rows, order, cap, std::vector<std::int64_t>(q.var_count(), -1), {}};
  bt.run(0);
  return sorted_answers(std::move(bt.answers), db);
}

std::vector<Row> naive_join(const ConjunctiveQuery& q, const Database& db, std::size_t cap) {
  const std::vector<std::vector<Row>> rows = raw_atom_rows(q, db);
  std::size_t combinations = 1;
  for (const auto& r : rows) {
    if (r.empty()) {
      return {};
    }
    if (combinations > cap / r.size()) {
      throw CapExceededError("row combinations exceed the cap of " + std::to_string(cap));
    }
    combinations *= r.size();
  }

  const std::size_t m = q.atoms.size();
  std::vector<std::size_t> pick(m, 0);
  std::set<Row> answers;
  while (true) {
    std::vector<std::int64_t> binding(q.var_count(), -1);
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      const Row& row = rows[a][pick[a]];
      const auto& vars = q.atom_vars[a];
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::uint32_t v = vars[i];
        if (binding[v] < 0) {
          binding[v] = row[i];
        } else if (binding[v] != static_cast<std::int64_t>(row[i])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      Row answer;
      answer.reserve(q.head_var.size());
      for (std::uint32_t v : q.head_var) {
        answer.push_back(static_cast<ValueId>(binding[v]));
      }
      answers.insert(std::move(answer));
    }

    std::size_t a = m;
    while (a > 0) {
      --a;
      if (++pick[a] < rows[a].size()) {
        break;
      }
      pick[a] = 0;
      if (a == 0) {
        return sorted_answers(std::move(answers), db);
      }
    }
  }
}

}  // namespace divkit
