#include "divkit/ultrametric_tree.hpp"

#include <algorithm>
#include <sstream>

namespace divkit {

std::vector<ElementId> UltrametricTree::ball_elements(std::int32_t n) const {
  const Node& node = nodes.at(n);
  return std::vector<ElementId>(leaf_order.begin() + node.begin, leaf_order.begin() + node.end);
}

Rational UltrametricTree::lca_radius(ElementId a, ElementId b) const {
  if (a == b) return Rational();
  std::int32_t u = leaf_node.at(a), v = leaf_node.at(b);
  while (u != v) {
    if (nodes[u].depth >= nodes[v].depth) {
      u = nodes[u].parent;
    } else {
      v = nodes[v].parent;
    }
    if (u < 0 || v < 0) throw InternalError("leaves in disjoint trees");
  }
  return nodes[u].radius;
}

void UltrametricTree::finalize() {
  if (root < 0) throw InternalError("tree has no root");
  for (auto& n : nodes) n.children.clear();
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(nodes.size()); ++i) {
    if (i == root) continue;
    std::int32_t p = nodes[i].parent;
    if (p < 0 || p >= static_cast<std::int32_t>(nodes.size())) {
      throw InternalError("node with invalid parent");
    }
    nodes[p].children.push_back(i);
  }

  // min_leaf bottom-up along a DFS, then children sorted by it.
  std::vector<std::int32_t> order;
  order.reserve(nodes.size());
  std::vector<std::int32_t> stack{root};
  std::vector<bool> seen(nodes.size(), false);
  while (!stack.empty()) {
    std::int32_t n = stack.back();
    stack.pop_back();
    if (seen[n]) throw InternalError("cycle in tree parents");
    seen[n] = true;
    order.push_back(n);
    for (std::int32_t c : nodes[n].children) stack.push_back(c);
  }
  if (order.size() != nodes.size()) throw InternalError("unreachable tree nodes");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node& n = nodes[*it];
    if (n.children.empty()) {
      if (n.element < 0) throw InternalError("internal node without children");
      n.min_leaf = static_cast<ElementId>(n.element);
    } else {
      if (n.element >= 0) throw InternalError("leaf node with children");
      n.min_leaf = nodes[n.children[0]].min_leaf;
      for (std::int32_t c : n.children) n.min_leaf = std::min(n.min_leaf, nodes[c].min_leaf);
    }
  }
  for (auto& n : nodes) {
    std::sort(n.children.begin(), n.children.end(),
              [&](std::int32_t a, std::int32_t b) { return nodes[a].min_leaf < nodes[b].min_leaf; });
  }

  leaf_order.clear();
  leaf_node.clear();
  struct Frame {
    std::int32_t node;
    std::size_t next_child;
  };
  std::vector<Frame> dfs{{root, 0}};
  nodes[root].depth = 0;
  while (!dfs.empty()) {
    Frame& f = dfs.back();
    Node& n = nodes[f.node];
    if (f.next_child == 0) {
      n.begin = static_cast<std::uint32_t>(leaf_order.size());
      if (n.children.empty()) {
        leaf_node[static_cast<ElementId>(n.element)] = f.node;
        leaf_order.push_back(static_cast<ElementId>(n.element));
      }
    }
    if (f.next_child < n.children.size()) {
      std::int32_t c = n.children[f.next_child++];
      nodes[c].depth = n.depth + 1;
      dfs.push_back({c, 0});
    } else {
      n.end = static_cast<std::uint32_t>(leaf_order.size());
      dfs.pop_back();
    }
  }

  std::size_t leaves = leaf_order.size();
  if (nodes.size() > 2 * leaves - 1) throw InternalError("tree exceeds 2n-1 nodes");
}

UltrametricTree build_ultrametric_tree(std::span<const ElementId> elements,
                                       const MetricOracle& u) {
  if (elements.empty()) throw PreconditionError("cannot build a tree over an empty set");
  std::size_t n = elements.size();
  UltrametricTree t;

  if (n == 1) {
    UltrametricTree::Node leaf;
    leaf.element = static_cast<std::int32_t>(elements[0]);
    t.nodes.push_back(leaf);
    t.root = 0;
    t.finalize();
    return t;
  }

  // Prim over the dense graph; ties by (weight, smaller element ids).
  struct Edge {
    std::size_t a, b;
    Rational w;
  };
  std::vector<Edge> mst;
  mst.reserve(n - 1);
  {
    std::vector<bool> used(n, false);
    std::vector<Rational> best(n);
    std::vector<std::size_t> best_from(n, 0);
    used[0] = true;
    for (std::size_t i = 1; i < n; ++i) best[i] = u.distance(elements[0], elements[i]);
    for (std::size_t step = 1; step < n; ++step) {
      std::size_t pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        if (pick == n || best[i] < best[pick] ||
            (best[i] == best[pick] && elements[i] < elements[pick])) {
          pick = i;
        }
      }
      used[pick] = true;
      mst.push_back({best_from[pick], pick, best[pick]});
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        Rational d = u.distance(elements[pick], elements[i]);
        if (d < best[i] || (d == best[i] && elements[pick] < elements[best_from[i]])) {
          best[i] = d;
          best_from[i] = pick;
        }
      }
    }
  }
  std::sort(mst.begin(), mst.end(), [&](const Edge& x, const Edge& y) {
    if (x.w != y.w) return x.w < y.w;
    ElementId xl = std::min(elements[x.a], elements[x.b]), xh = std::max(elements[x.a], elements[x.b]);
    ElementId yl = std::min(elements[y.a], elements[y.b]), yh = std::max(elements[y.a], elements[y.b]);
    return std::tie(xl, xh) < std::tie(yl, yh);
  });

  // Merge in increasing weight; a cluster whose formation radius is below the
  // current edge weight is emitted as a finished tree node.
  struct Cluster {
    Rational r;
    std::vector<std::int32_t> children;  // finished node ids
    std::int32_t leaf_element = -1;      // set while the cluster is a singleton
  };
  std::vector<Cluster> clusters(n);
  std::vector<std::size_t> cluster_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    clusters[i].leaf_element = static_cast<std::int32_t>(elements[i]);
    cluster_of[i] = i;
  }
  std::vector<std::size_t> members_scratch;

  auto emit = [&](Cluster& c) -> std::int32_t {
    UltrametricTree::Node node;
    if (c.children.empty()) {
      node.element = c.leaf_element;
    } else {
      node.radius = c.r;
      node.children = c.children;
    }
    t.nodes.push_back(std::move(node));
    return static_cast<std::int32_t>(t.nodes.size() - 1);
  };

  // Cluster membership via per-vertex pointers, updated on merge (small n;
  // quadratic total is the documented bound).
  std::vector<std::vector<std::size_t>> member_list(n);
  for (std::size_t i = 0; i < n; ++i) member_list[i] = {i};

  for (const Edge& e : mst) {
    std::size_t cu = cluster_of[e.a], cv = cluster_of[e.b];
    if (cu == cv) throw InternalError("MST edge within one cluster");
    std::vector<std::int32_t> merged_children;
    for (std::size_t side : {cu, cv}) {
      Cluster& c = clusters[side];
      if (e.w < c.r) throw InternalError("cluster radius above edge weight");
      if (c.r < e.w || c.children.empty()) {
        merged_children.push_back(emit(c));
      } else {
        merged_children.insert(merged_children.end(), c.children.begin(), c.children.end());
      }
    }
    Cluster& target = clusters[cu];
    target.r = e.w;
    target.children = std::move(merged_children);
    target.leaf_element = -1;
    for (std::size_t m : member_list[cv]) {
      cluster_of[m] = cu;
      member_list[cu].push_back(m);
    }
    member_list[cv].clear();
  }

  std::size_t final_cluster = cluster_of[0];
  t.root = emit(clusters[final_cluster]);
  for (std::int32_t c : t.nodes[t.root].children) t.nodes[c].parent = t.root;
  // Parent links for deeper nodes were not known at emit time; recover them.
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(t.nodes.size()); ++i) {
    for (std::int32_t c : t.nodes[i].children) t.nodes[c].parent = i;
  }
  t.finalize();
  return t;
}

TreeValidation validate_tree(const UltrametricTree& t, const MetricOracle& u) {
  auto fail = [](std::string m) { return TreeValidation{false, std::move(m)}; };
  if (t.root < 0 || t.nodes.empty()) return fail("no root");
  if (t.nodes.size() > 2 * t.leaf_order.size() - 1) return fail("more than 2n-1 nodes");

  for (std::int32_t i = 0; i < static_cast<std::int32_t>(t.nodes.size()); ++i) {
    const auto& n = t.nodes[i];
    if (t.is_leaf(i)) {
      if (!n.radius.is_zero()) return fail("leaf with nonzero radius");
      continue;
    }
    if (n.children.size() < 2) return fail("internal node with fewer than 2 children");
    std::size_t covered = 0;
    for (std::int32_t c : n.children) {
      const auto& cn = t.nodes[c];
      if (cn.parent != i) return fail("child with wrong parent link");
      if (!(cn.radius < n.radius)) return fail("child radius not strictly smaller");
      if (cn.begin != n.begin + covered) return fail("children do not partition the ball");
      covered += t.leaf_count(c);
    }
    if (covered != t.leaf_count(i)) return fail("children do not cover the ball");

    // Every cross-child pair realizes exactly the ball radius.
    for (std::size_t x = 0; x < n.children.size(); ++x) {
      for (std::size_t y = x + 1; y < n.children.size(); ++y) {
        for (ElementId a : t.ball_elements(n.children[x])) {
          for (ElementId b : t.ball_elements(n.children[y])) {
            if (u.distance(a, b) != n.radius) {
              return fail("cross-child pair (" + std::to_string(a) + "," + std::to_string(b) +
                          ") does not realize the ball radius");
            }
          }
        }
      }
    }
  }

  // Independent route: LCA radius reproduces the oracle on every pair.
  for (std::size_t i = 0; i < t.leaf_order.size(); ++i) {
    for (std::size_t j = i + 1; j < t.leaf_order.size(); ++j) {
      ElementId a = t.leaf_order[i], b = t.leaf_order[j];
      if (t.lca_radius(a, b) != u.distance(a, b)) {
        return fail("LCA radius mismatch for pair (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
      }
    }
  }
  return {};
}

std::string serialize_tree(const UltrametricTree& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    out << i << ' ' << n.parent << ' ' << n.radius.format() << ' ' << n.element << '\n';
  }
  return out.str();
}

UltrametricTree parse_tree(const std::string& text) {
  UltrametricTree t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<bool> have;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long id, parent, element;
    std::string radius;
    if (!(ls >> id >> parent >> radius >> element)) {
      throw ParseError("tree line " + std::to_string(lineno) + ": expected 'id parent radius element'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError("tree line " + std::to_string(lineno) + ": trailing data");
    if (id < 0) throw ParseError("tree line " + std::to_string(lineno) + ": negative id");
    std::size_t idx = static_cast<std::size_t>(id);
    if (idx >= t.nodes.size()) {
      t.nodes.resize(idx + 1);
      have.resize(idx + 1, false);
    }
    if (have[idx]) throw ParseError("tree line " + std::to_string(lineno) + ": duplicate id");
    have[idx] = true;
    UltrametricTree::Node& n = t.nodes[idx];
    n.parent = static_cast<std::int32_t>(parent);
    n.radius = Rational::parse(radius);
    n.element = static_cast<std::int32_t>(element);
    if (parent < 0) {
      if (t.root >= 0) throw ParseError("tree has multiple roots");
      t.root = static_cast<std::int32_t>(idx);
    }
  }
  if (t.nodes.empty()) throw ParseError("empty tree dump");
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (!have[i]) throw ParseError("missing tree node id " + std::to_string(i));
  }
  if (t.root < 0) throw ParseError("tree has no root");
  try {
    t.finalize();
  } catch (const InternalError& e) {
    throw ParseError(std::string("inconsistent tree dump: ") + e.what());
  }
  return t;
}

}  // namespace divkit
