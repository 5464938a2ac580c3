#include "divkit/explicit_solver.hpp"

#include <algorithm>

namespace divkit {

namespace {

CandidateTable merge_tables(const CandidateTable& left, const CandidateTable& right,
                            std::size_t k, const DiversityFunction& delta,
                            const MetricOracle& u) {
  std::size_t max_left = left.size() - 1, max_right = right.size() - 1;
  std::size_t max_out = std::min(k, max_left + max_right);
  CandidateTable out(max_out + 1);
  for (std::size_t i = 0; i <= max_out; ++i) {
    bool have = false;
    std::size_t lo = i > max_right ? i - max_right : 0;
    std::size_t hi = std::min(i, max_left);
    for (std::size_t j1 = lo; j1 <= hi; ++j1) {
      std::vector<ElementId> members = left[j1].members;
      const auto& rm = right[i - j1].members;
      members.insert(members.end(), rm.begin(), rm.end());
      Rational value = delta.evaluate(members, u);
      if (!have || value > out[i].value) {
        out[i] = {std::move(members), value};
        have = true;
      }
    }
  }
  return out;
}

}  // namespace

ExplicitSolveResult solve_explicit_dp(std::span<const ElementId> elements, const MetricOracle& u,
                                      std::size_t k, const DiversityFunction& delta,
                                      ExplicitDpDebug* debug) {
  if (k <= 1) throw PreconditionError("diverse subset size must be at least 2");
  if (k > elements.size()) {
    throw PreconditionError("diverse subset size " + std::to_string(k) +
                            " exceeds the set size " + std::to_string(elements.size()));
  }
  if (!delta.weakly_subset_monotone(/*ultrametric=*/true)) {
    throw PreconditionError(std::string("diversity function '") + std::string(delta.name()) +
                            "' is not weakly subset-monotone over ultrametrics");
  }

  UltrametricTree tree = build_ultrametric_tree(elements, u);

  std::vector<CandidateTable> tables(tree.nodes.size());
  // Children are emitted before parents at build time, but recompute a
  // post-order to stay independent of node numbering.
  std::vector<std::int32_t> post;
  post.reserve(tree.nodes.size());
  {
    std::vector<std::pair<std::int32_t, std::size_t>> stack{{tree.root, 0}};
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < tree.nodes[node].children.size()) {
        std::int32_t c = tree.nodes[node].children[next++];
        stack.emplace_back(c, 0);
      } else {
        post.push_back(node);
        stack.pop_back();
      }
    }
  }

  for (std::int32_t node : post) {
    const auto& n = tree.nodes[node];
    if (tree.is_leaf(node)) {
      CandidateTable t(2);
      t[1].members = {static_cast<ElementId>(n.element)};
      tables[node] = std::move(t);
      continue;
    }
    CandidateTable acc = tables[n.children[0]];
    for (std::size_t c = 1; c < n.children.size(); ++c) {
      acc = merge_tables(acc, tables[n.children[c]], k, delta, u);
    }
    tables[node] = std::move(acc);
  }

  const CandidateTable& root_table = tables[tree.root];
  if (root_table.size() <= k) throw InternalError("root candidate table misses k");
  ExplicitSolveResult result;
  result.subset = root_table[k].members;
  result.value = root_table[k].value;
  std::sort(result.subset.begin(), result.subset.end());
  if (debug) {
    debug->tree = std::move(tree);
    debug->tables = std::move(tables);
  }
  return result;
}

ExplicitSolveResult brute_force_oracle(std::span<const ElementId> elements, const MetricOracle& d,
                                       std::size_t k, const DiversityFunction& delta,
                                       std::size_t cap) {
  std::size_t n = elements.size();
  if (k < 1) throw PreconditionError("subset size must be at least 1");
  if (k > n) {
    throw PreconditionError("subset size " + std::to_string(k) + " exceeds the set size " +
                            std::to_string(n));
  }

  // C(n,k) against the cap, saturating instead of overflowing.
  {
    std::size_t count = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      count = count * (n - k + i) / i;
      if (count > cap) {
        throw CapExceededError("oracle refuses " + std::to_string(n) + " choose " +
                               std::to_string(k) + " subsets (cap " + std::to_string(cap) + ")");
      }
    }
  }

  std::vector<ElementId> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<ElementId> subset(k);
  ExplicitSolveResult best;
  bool have = false;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = sorted[idx[i]];
    Rational value = delta.evaluate(subset, d);
    if (!have || value > best.value) {
      best = {subset, value};
      have = true;
    }
    // next combination, lexicographic
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return best;
    }
    if (k == 0) return best;
  }
}

}  // namespace divkit
