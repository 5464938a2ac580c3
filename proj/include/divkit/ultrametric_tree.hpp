#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "divkit/metric.hpp"

namespace divkit {

// Ball hierarchy of an ultrametric over a finite element set. Leaves are
// single elements with radius 0; an internal node's radius is the maximum
// pairwise distance inside its ball and strictly exceeds every child radius.
// Children are ordered by ascending minimum element id. Leaf order is the
// DFS order of the finished tree, so every ball is a contiguous span of
// leaf_order.
struct UltrametricTree {
  struct Node {
    std::int32_t parent = -1;
    std::vector<std::int32_t> children;
    Rational radius;
    std::int32_t element = -1;  // leaf element id, -1 for internal nodes
    std::uint32_t begin = 0, end = 0;  // span in leaf_order
    ElementId min_leaf = 0;
    std::uint32_t depth = 0;
  };

  std::vector<Node> nodes;
  std::int32_t root = -1;
  std::vector<ElementId> leaf_order;
  std::unordered_map<ElementId, std::int32_t> leaf_node;

  bool is_leaf(std::int32_t n) const { return nodes[n].element >= 0; }
  std::size_t leaf_count(std::int32_t n) const { return nodes[n].end - nodes[n].begin; }
  std::vector<ElementId> ball_elements(std::int32_t n) const;
  Rational lca_radius(ElementId a, ElementId b) const;

  // Recomputes children order, leaf order, spans, depths and min-leaf ids
  // from nodes/parent/element fields. Used by the builder and the parser.
  void finalize();
};

// Requires a non-empty set and an oracle that is an ultrametric on it
// (not verified here; see is_ultrametric / validate_tree).
UltrametricTree build_ultrametric_tree(std::span<const ElementId> elements,
                                       const MetricOracle& u);

struct TreeValidation {
  bool ok = true;
  std::string message;
};
// Checks the ball laminar structure, radius strict decrease, exact
// cross-child distance realization, and LCA radius against the oracle.
TreeValidation validate_tree(const UltrametricTree& t, const MetricOracle& u);

// One node per line: "id parent radius element" with radius as num/den,
// parent -1 at the root, element -1 on internal nodes. Round-trips
// bit-exactly through parse_tree.
std::string serialize_tree(const UltrametricTree& t);
UltrametricTree parse_tree(const std::string& text);

}  // namespace divkit
