#include "divkit/join_tree.hpp"

#include <algorithm>

#include "divkit/errors.hpp"

namespace divkit {

namespace {

using VarSet = std::vector<std::uint32_t>;  // sorted distinct variable indexes

VarSet sorted_distinct(const std::vector<std::uint32_t>& vars) {
  VarSet s = vars;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset_of(const VarSet& a, const VarSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct GyoResult {
  bool acyclic = false;
  std::vector<std::int32_t> parent;         // over the input hyperedge indices
  std::int32_t root = -1;
  std::vector<std::int32_t> removal_order;
  std::vector<std::int32_t> residue;
};

// Repeatedly removes ears: an edge whose variables shared with any other
// live edge are covered by one witness edge. Lowest-index ear first,
// lowest-index witness.
GyoResult gyo_reduce(const std::vector<VarSet>& edges) {
  const std::size_t m = edges.size();
  GyoResult r;
  r.parent.assign(m, -1);
  std::vector<bool> alive(m, true);
  std::size_t live = m;

  bool changed = true;
  while (live > 1 && changed) {
    changed = false;
    for (std::size_t a = 0; a < m && live > 1; ++a) {
      if (!alive[a]) {
        continue;
      }
      VarSet shared;
      for (std::uint32_t v : edges[a]) {
        for (std::size_t b = 0; b < m; ++b) {
          if (b != a && alive[b] &&
              std::binary_search(edges[b].begin(), edges[b].end(), v)) {
            shared.push_back(v);
            break;
          }
        }
      }
      std::int32_t witness = -1;
      for (std::size_t b = 0; b < m; ++b) {
        if (b != a && alive[b] && subset_of(shared, edges[b])) {
          witness = static_cast<std::int32_t>(b);
          break;
        }
      }
      if (witness < 0) {
        continue;
      }
      alive[a] = false;
      --live;
      r.parent[a] = witness;
      r.removal_order.push_back(static_cast<std::int32_t>(a));
      changed = true;
    }
  }

  if (live == 1) {
    r.acyclic = true;
    for (std::size_t a = 0; a < m; ++a) {
      if (alive[a]) {
        r.root = static_cast<std::int32_t>(a);
      }
    }
  } else {
    for (std::size_t a = 0; a < m; ++a) {
      if (alive[a]) {
        r.residue.push_back(static_cast<std::int32_t>(a));
      }
    }
  }
  return r;
}

std::vector<VarSet> atom_edges(const ConjunctiveQuery& q) {
  std::vector<VarSet> edges;
  edges.reserve(q.atom_vars.size());
  for (const auto& vars : q.atom_vars) {
    edges.push_back(sorted_distinct(vars));
  }
  return edges;
}

}  // namespace

std::variant<JoinTree, NotAcyclic> build_join_tree(const ConjunctiveQuery& q) {
  if (q.atoms.empty()) {
    throw PreconditionError("a join tree needs at least one atom");
  }
  GyoResult r = gyo_reduce(atom_edges(q));
  if (!r.acyclic) {
    return NotAcyclic{std::move(r.residue)};
  }
  JoinTree t;
  t.parent = std::move(r.parent);
  t.root = r.root;
  t.removal_order = std::move(r.removal_order);
  t.children.assign(t.parent.size(), {});
  // Ears attach to witnesses removed later, so parent links already form
  // a tree rooted at the survivor.
  for (std::size_t a = 0; a < t.parent.size(); ++a) {
    if (t.parent[a] >= 0) {
      t.children[static_cast<std::size_t>(t.parent[a])].push_back(static_cast<std::int32_t>(a));
    }
  }
  return t;
}

bool is_acyclic(const ConjunctiveQuery& q) {
  return std::holds_alternative<JoinTree>(build_join_tree(q));
}

bool is_free_connex(const ConjunctiveQuery& q) {
  std::vector<VarSet> edges = atom_edges(q);
  edges.push_back(sorted_distinct(q.head_var));
  return gyo_reduce(edges).acyclic;
}

std::optional<std::array<std::size_t, 3>> find_disruptive_trio(const ConjunctiveQuery& q) {
  const std::size_t l = q.head.size();
  std::vector<std::vector<bool>> neighbor(l, std::vector<bool>(l, false));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      for (const auto& vars : q.atom_vars) {
        bool has_i = false, has_j = false;
        for (std::uint32_t v : vars) {
          has_i = has_i || v == q.head_var[i];
          has_j = has_j || v == q.head_var[j];
        }
        if (has_i && has_j) {
          neighbor[i][j] = true;
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      for (std::size_t k = j + 1; k < l; ++k) {
        if (!neighbor[i][j] && neighbor[i][k] && neighbor[j][k]) {
          return std::array<std::size_t, 3>{i + 1, j + 1, k + 1};
        }
      }
    }
  }
  return std::nullopt;
}

bool running_intersection_holds(const ConjunctiveQuery& q, const JoinTree& t) {
  const std::size_t m = q.atoms.size();
  if (t.parent.size() != m) {
    return false;
  }
  // Adjacency of the undirected tree.
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (t.parent[a] >= 0) {
      adj[a].push_back(static_cast<std::size_t>(t.parent[a]));
      adj[static_cast<std::size_t>(t.parent[a])].push_back(a);
    }
  }
  for (std::uint32_t v = 0; v < q.var_count(); ++v) {
    std::vector<bool> holds(m, false);
    std::size_t count = 0, start = m;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::uint32_t w : q.atom_vars[a]) {
        if (w == v) {
          holds[a] = true;
          ++count;
          start = std::min(start, a);
          break;
        }
      }
    }
    if (count <= 1) {
      continue;
    }
    // BFS restricted to atoms containing v must reach all of them.
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> queue{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      std::size_t a = queue.back();
      queue.pop_back();
      for (std::size_t b : adj[a]) {
        if (holds[b] && !seen[b]) {
          seen[b] = true;
          ++reached;
          queue.push_back(b);
        }
      }
    }
    if (reached != count) {
      return false;
    }
  }
  return true;
}

}  // namespace divkit
