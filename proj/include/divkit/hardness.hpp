#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "divkit/elements.hpp"
#include "divkit/metric.hpp"
#include "divkit/rational.hpp"

namespace divkit {

// Simple undirected graph on vertices 1..n.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;  // input order, endpoints as given

  // First line: n. Every further non-empty line: "u v" with
  // 1 <= u,v <= n, u != v; duplicate edges are an error.
  static Graph parse(const std::string& text);
  static Graph load(const std::string& path);

  std::vector<unsigned> degrees() const;
  bool adjacent(unsigned u, unsigned v) const;
};

// Independent-set instance rewritten as a diversity threshold on V with
// distance 1 between adjacent vertices and 2 otherwise: the Weitzman
// diversity of the whole set reaches n - k + 2(k-1) exactly when an
// independent set of size k exists.
struct MetricHardnessInstance {
  ElementTable elements;  // labels v1..vn
  TableMetric metric;
  Rational threshold;
  std::size_t k = 0;
};
MetricHardnessInstance is_to_metric_instance(const Graph& g, std::size_t k);

// The same instance over arity-5 tuples whose Hamming distances are 4 on
// edges and 5 on non-adjacent pairs; threshold 4(n-k) + 5(k-1). Each
// vertex starts as (a_i,..,a_i); edge j overwrites the lowest coordinate
// still initial in both endpoints with b_j, which exists because degrees
// are at most 3.
struct TupleHardnessInstance {
  ElementTable elements;  // relation T, arity 5
  Rational threshold;
  std::size_t k = 0;
};
TupleHardnessInstance is_to_tuple_instance(const Graph& g, std::size_t k);

// Exhaustive search; n <= 16.
bool exact_independent_set(const Graph& g, std::size_t k);

}  // namespace divkit
