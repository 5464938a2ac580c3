#include "divkit/implicit_solver.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

#include "divkit/errors.hpp"

namespace divkit {

namespace {

struct FrontierEntry {
  BallId ball;
  std::unique_ptr<ChildCursor> cursor;
  std::vector<BallId> seen;  // children enumerated so far, in cursor order
  Solution candidate;        // member of the cursor's current child
  std::uint64_t discovery;
};

// Positions the cursor on the next child and refreshes the candidate.
bool advance(ImplicitTreeHandle& h, FrontierEntry& e) {
  if (!e.cursor->next()) {
    return false;
  }
  e.seen.push_back(e.cursor->current());
  e.candidate = h.member(e.cursor->current());
  return true;
}

// New frontier entry whose candidate is the second child; the first child's
// member is already covered by the picked set.
FrontierEntry open_ball(ImplicitTreeHandle& h, BallId ball, std::uint64_t discovery) {
  FrontierEntry e;
  e.ball = std::move(ball);
  e.discovery = discovery;
  e.cursor = h.children(e.ball);
  e.seen.push_back(e.cursor->current());
  if (!advance(h, e)) {
    throw InternalError("non-singleton ball reported a single child");
  }
  return e;
}

Rational set_diversity(ImplicitTreeHandle& h, const DiversityFunction& delta,
                       const std::vector<Solution>& set) {
  auto dist = [&h, &set](std::size_t i, std::size_t j) {
    return h.distance(set[i], set[j]);
  };
  return delta.evaluate_pairs(set.size(), dist);
}

Rational min_distance_to_set(ImplicitTreeHandle& h, const Solution& x,
                             const std::vector<Solution>& set) {
  Rational best = h.distance(x, set[0]);
  for (std::size_t i = 1; i < set.size(); ++i) {
    Rational d = h.distance(x, set[i]);
    if (d < best) {
      best = d;
    }
  }
  return best;
}

}  // namespace

DiverseResult greedy_diverse(ImplicitTreeHandle& handle, std::size_t k,
                             const DiversityFunction& delta, SolverStats* stats,
                             const GreedyOptions& opts) {
  if (k < 1) {
    throw PreconditionError("k must be at least 1");
  }
  if (opts.require_subset_monotone && !delta.subset_monotone(/*ultrametric=*/true)) {
    throw PreconditionError("greedy search requires a subset-monotone diversity function; " +
                            std::string(delta.name()) + " is not subset-monotone on ultrametrics");
  }
  SolverStats local;
  SolverStats& st = stats != nullptr ? *stats : local;

  BallId root = handle.root();
  std::vector<Solution> picked;
  picked.push_back(handle.member(root));
  Rational value;
  if (k == 1) {
    return {std::move(picked), value};
  }

  const bool fast_weitzman = opts.weitzman_increment && delta.kind == DiversityKind::Weitzman;

  std::vector<FrontierEntry> frontier;
  std::uint64_t next_discovery = 0;
  if (!handle.singleton(root)) {
    frontier.push_back(open_ball(handle, root, next_discovery++));
  }
  st.max_frontier = std::max<std::uint64_t>(st.max_frontier, frontier.size());

  while (picked.size() < k) {
    if (frontier.empty()) {
      throw PreconditionError("the set has fewer than k solutions");
    }

    std::size_t best = 0;
    Rational best_score;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      Rational score;
      if (fast_weitzman) {
        score = min_distance_to_set(handle, frontier[i].candidate, picked);
        ++st.incremental_updates;
      } else {
        std::vector<Solution> extended = picked;
        extended.push_back(frontier[i].candidate);
        score = set_diversity(handle, delta, extended);
        ++st.delta_evaluations;
      }
      if (i == 0 || best_score < score) {
        best = i;
        best_score = score;
      }
      // Equal scores keep the earlier-discovered ball.
    }

    picked.push_back(frontier[best].candidate);
    value = fast_weitzman ? value + best_score : best_score;

    if (!advance(handle, frontier[best])) {
      ++st.balls_expanded;
      std::vector<BallId> children = std::move(frontier[best].seen);
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(best));
      for (BallId& child : children) {
        if (!handle.singleton(child)) {
          frontier.push_back(open_ball(handle, std::move(child), next_discovery++));
        }
      }
      st.max_frontier = std::max<std::uint64_t>(st.max_frontier, frontier.size());
    }
  }

  return {std::move(picked), value};
}

namespace {

void collect_relevant(ImplicitTreeHandle& h, const BallId& ball, std::size_t budget,
                      std::vector<Solution>& out) {
  if (budget <= 1 || h.singleton(ball)) {
    out.push_back(h.member(ball));
    return;
  }
  std::vector<BallId> kept;
  auto cursor = h.children(ball);
  kept.push_back(cursor->current());
  while (kept.size() < budget && cursor->next()) {
    kept.push_back(cursor->current());
  }
  const std::size_t child_budget = budget - kept.size() + 1;
  for (const BallId& child : kept) {
    collect_relevant(h, child, child_budget, out);
  }
}

}  // namespace

std::vector<Solution> relevant_solutions(ImplicitTreeHandle& handle, std::size_t k) {
  if (k < 1) {
    throw PreconditionError("k must be at least 1");
  }
  std::vector<Solution> out;
  collect_relevant(handle, handle.root(), k, out);
  if (k < 64 && out.size() > (std::size_t{1} << k)) {
    throw InternalError("relevant pool exceeded its 2^k bound");
  }
  return out;
}

DiverseResult fpt_diverse(ImplicitTreeHandle& handle, std::size_t k,
                          const DiversityFunction& delta, SolverStats* stats) {
  if (k < 1) {
    throw PreconditionError("k must be at least 1");
  }
  if (!delta.weakly_monotone(/*ultrametric=*/true)) {
    throw PreconditionError("the exact search requires a weakly monotone diversity function");
  }
  SolverStats local;
  SolverStats& st = stats != nullptr ? *stats : local;

  std::vector<Solution> pool = relevant_solutions(handle, k);
  st.relevant_elements = pool.size();
  if (pool.size() < k) {
    throw PreconditionError("the set has fewer than k solutions");
  }
  if (k == 1) {
    return {{pool[0]}, Rational{}};
  }

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = i;
  }
  const std::size_t n = pool.size();
  std::vector<Solution> best_set;
  Rational best_value;
  bool have_best = false;
  std::vector<Solution> current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) {
      current[i] = pool[idx[i]];
    }
    Rational v = [&] {
      auto dist = [&](std::size_t i, std::size_t j) {
        return handle.distance(current[i], current[j]);
      };
      ++st.delta_evaluations;
      return delta.evaluate_pairs(k, dist);
    }();
    if (!have_best || best_value < v) {
      have_best = true;
      best_value = v;
      best_set = current;
    }

    std::size_t i = k;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      break;
    }
  }

  return {std::move(best_set), best_value};
}

}  // namespace divkit
