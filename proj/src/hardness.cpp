#include "divkit/hardness.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "divkit/errors.hpp"

namespace divkit {

Graph Graph::parse(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  std::set<std::pair<unsigned, unsigned>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) {
      continue;  // blank line
    }
    if (!have_n) {
      std::size_t used = 0;
      unsigned long n = 0;
      try {
        n = std::stoul(first, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      std::string rest;
      if (used != first.size() || (ls >> rest)) {
        throw ParseError("graph, line " + std::to_string(lineno) +
                         ": expected the vertex count alone");
      }
      g.n = n;
      have_n = true;
      continue;
    }
    unsigned u = 0, v = 0;
    std::istringstream es(line);
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) {
      throw ParseError("graph, line " + std::to_string(lineno) + ": expected 'u v'");
    }
    if (u < 1 || u > g.n || v < 1 || v > g.n) {
      throw ParseError("graph, line " + std::to_string(lineno) + ": vertex out of range");
    }
    if (u == v) {
      throw ParseError("graph, line " + std::to_string(lineno) + ": self-loop");
    }
    auto norm = std::minmax(u, v);
    if (!seen.insert({norm.first, norm.second}).second) {
      throw ParseError("graph, line " + std::to_string(lineno) + ": duplicate edge");
    }
    g.edges.emplace_back(u, v);
  }
  if (!have_n) {
    throw ParseError("graph: missing vertex count");
  }
  return g;
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<unsigned> Graph::degrees() const {
  std::vector<unsigned> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u - 1];
    ++deg[v - 1];
  }
  return deg;
}

bool Graph::adjacent(unsigned u, unsigned v) const {
  for (auto [a, b] : edges) {
    if ((a == u && b == v) || (a == v && b == u)) {
      return true;
    }
  }
  return false;
}

MetricHardnessInstance is_to_metric_instance(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.n) {
    throw PreconditionError("k must lie in 1..n");
  }
  MetricHardnessInstance inst{ElementTable{}, TableMetric{g.n}, Rational{}, k};
  for (std::size_t i = 1; i <= g.n; ++i) {
    inst.elements.add_label("v" + std::to_string(i));
  }
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      const bool edge = g.adjacent(static_cast<unsigned>(i + 1), static_cast<unsigned>(j + 1));
      inst.metric.set(static_cast<ElementId>(i), static_cast<ElementId>(j),
                      Rational::from_int(edge ? 1 : 2));
    }
  }
  // n - k singleton separations at distance >= 1 plus k - 1 independent
  // separations at distance 2.
  inst.threshold = Rational::from_int(static_cast<std::int64_t>(g.n - k) +
                                      2 * (static_cast<std::int64_t>(k) - 1));
  return inst;
}

TupleHardnessInstance is_to_tuple_instance(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.n) {
    throw PreconditionError("k must lie in 1..n");
  }
  for (unsigned d : g.degrees()) {
    if (d > 3) {
      throw PreconditionError("the tuple construction needs maximum degree 3");
    }
  }
  const unsigned arity = 5;
  std::vector<std::vector<std::string>> tuples(g.n);
  std::vector<std::vector<bool>> initial(g.n, std::vector<bool>(arity, true));
  for (std::size_t i = 0; i < g.n; ++i) {
    tuples[i].assign(arity, "a" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const std::size_t u = g.edges[j].first - 1;
    const std::size_t v = g.edges[j].second - 1;
    std::size_t h = arity;
    for (std::size_t c = 0; c < arity; ++c) {
      if (initial[u][c] && initial[v][c]) {
        h = c;
        break;
      }
    }
    if (h == arity) {
      throw InternalError("no shared free coordinate despite the degree bound");
    }
    const std::string b = "b" + std::to_string(j + 1);
    tuples[u][h] = b;
    tuples[v][h] = b;
    initial[u][h] = false;
    initial[v][h] = false;
  }

  TupleHardnessInstance inst;
  inst.k = k;
  for (const auto& t : tuples) {
    inst.elements.add_tuple("T", t);
  }
  inst.threshold = Rational::from_int(4 * (static_cast<std::int64_t>(g.n) -
                                           static_cast<std::int64_t>(k)) +
                                      5 * (static_cast<std::int64_t>(k) - 1));
  return inst;
}

bool exact_independent_set(const Graph& g, std::size_t k) {
  if (g.n > 16) {
    throw PreconditionError("exhaustive independent-set search is capped at 16 vertices");
  }
  if (k == 0) {
    return true;
  }
  if (k > g.n) {
    return false;
  }
  std::vector<std::uint32_t> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u - 1] |= 1u << (v - 1);
    adj[v - 1] |= 1u << (u - 1);
  }
  const std::uint32_t limit = 1u << g.n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) {
      continue;
    }
    bool independent = true;
    for (std::size_t i = 0; i < g.n && independent; ++i) {
      if ((mask & (1u << i)) != 0 && (adj[i] & mask) != 0) {
        independent = false;
      }
    }
    if (independent) {
      return true;
    }
  }
  return false;
}

}  // namespace divkit
