#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "divkit/acq_handles.hpp"
#include "divkit/errors.hpp"

namespace divkit {

Rational answer_urel_distance(const Row& a, const Row& b) {
  if (a.size() != b.size()) {
    throw InternalError("answers of one query must share the head arity");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return Rational::inverse_pow(2, static_cast<unsigned>(i) + 1);
    }
  }
  return Rational{};
}

namespace {

// Reduced per-atom rows consistent with one answer prefix. Immutable and
// shared between the balls that only differ by forced extensions.
struct PrefixState {
  std::vector<std::vector<Row>> rows;
};
using StatePtr = std::shared_ptr<const PrefixState>;

class BasicAcqHandle : public ImplicitTreeHandle {
 public:
  BasicAcqHandle(ConjunctiveQuery q, const Database& db) : q_(std::move(q)), db_(&db) {
    auto built = build_join_tree(q_);
    if (!std::holds_alternative<JoinTree>(built)) {
      throw PreconditionError("the query is not acyclic");
    }
    tree_ = std::get<JoinTree>(std::move(built));
    adjacency_.assign(q_.atoms.size(), {});
    for (std::size_t a = 0; a < q_.atoms.size(); ++a) {
      if (tree_.parent[a] >= 0) {
        adjacency_[a].push_back(static_cast<std::size_t>(tree_.parent[a]));
        adjacency_[static_cast<std::size_t>(tree_.parent[a])].push_back(a);
      }
    }
    auto initial = std::make_shared<PrefixState>();
    initial->rows = yannakakis_reduce(q_, *db_, tree_).rows;
    empty_ = false;
    for (const auto& rows : initial->rows) {
      empty_ = empty_ || rows.empty();
    }
    if (!empty_) {
      BallId prefix;
      StatePtr state = initial;
      extend_max(prefix, state);
      root_ = std::move(prefix);
      states_.emplace(root_, std::move(state));
    }
  }

  BallId root() override {
    if (empty_) {
      throw PreconditionError("the query has no answers over this database");
    }
    return root_;
  }

  std::unique_ptr<ChildCursor> children(const BallId& ball) override;

  Solution member(const BallId& ball) override {
    ++stats_.members_materialized;
    StatePtr state = state_for(ball);
    BallId prefix = ball;
    while (prefix.size() < q_.head.size()) {
      std::vector<ValueId> vals = admissible(*state, prefix, prefix.size());
      bind_position(prefix, state, vals.front());
    }
    return prefix;
  }

  bool singleton(const BallId& ball) override { return ball.size() == q_.head.size(); }

  Rational distance(const Solution& a, const Solution& b) const override {
    return answer_urel_distance(a, b);
  }

  std::string describe(const Solution& s) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += db_->pool().str(s[i]);
    }
    return out + ")";
  }

 private:
  friend class BasicChildCursor;

  // Admissible values for head position pos under the state's rows, in
  // ascending string order. A head variable already bound by an earlier
  // position contributes its bound value.
  std::vector<ValueId> admissible(const PrefixState& state, const BallId& prefix,
                                  std::size_t pos) const {
    const std::uint32_t var = q_.head_var[pos];
    for (std::size_t r = 0; r < pos; ++r) {
      if (q_.head_var[r] == var) {
        return {prefix[r]};
      }
    }
    const auto [atom, col] = first_occurrence(var);
    std::vector<ValueId> vals;
    for (const Row& row : state.rows[atom]) {
      vals.push_back(row[col]);
    }
    std::sort(vals.begin(), vals.end(),
              [this](ValueId a, ValueId b) { return db_->value_less(a, b); });
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.empty()) {
      throw InternalError("a reduced non-empty state lost all values for a head position");
    }
    return vals;
  }

  std::pair<std::size_t, std::size_t> first_occurrence(std::uint32_t var) const {
    for (std::size_t a = 0; a < q_.atom_vars.size(); ++a) {
      for (std::size_t i = 0; i < q_.atom_vars[a].size(); ++i) {
        if (q_.atom_vars[a][i] == var) {
          return {a, i};
        }
      }
    }
    throw InternalError("head variable missing from every atom");
  }

  // Binds head position |prefix| to value: filters every atom containing
  // the variable, then restores full reduction by semijoining outward
  // from the touched atoms across the join tree.
  StatePtr bind(const PrefixState& state, std::size_t pos, ValueId value) const {
    const std::uint32_t var = q_.head_var[pos];
    auto next = std::make_shared<PrefixState>();
    next->rows = state.rows;

    std::vector<bool> touched(q_.atoms.size(), false);
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < q_.atoms.size(); ++a) {
      const auto& vars = q_.atom_vars[a];
      bool has = false;
      for (std::uint32_t v : vars) {
        has = has || v == var;
      }
      if (!has) {
        continue;
      }
      touched[a] = true;
      queue.push_back(a);
      std::vector<Row> kept;
      for (Row& row : next->rows[a]) {
        bool ok = true;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (vars[i] == var && row[i] != value) {
            ok = false;
            break;
          }
        }
        if (ok) {
          kept.push_back(std::move(row));
        }
      }
      next->rows[a] = std::move(kept);
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t w : adjacency_[u]) {
        if (!touched[w]) {
          touched[w] = true;
          semijoin(q_, w, next->rows[w], u, next->rows[u]);
          queue.push_back(w);
        }
      }
    }
    return next;
  }

  // Appends one value to the prefix, reusing the state when the position's
  // variable was already bound.
  void bind_position(BallId& prefix, StatePtr& state, ValueId value) const {
    const std::uint32_t var = q_.head_var[prefix.size()];
    bool bound = false;
    for (std::size_t r = 0; r < prefix.size(); ++r) {
      bound = bound || q_.head_var[r] == var;
    }
    if (!bound) {
      state = bind(*state, prefix.size(), value);
    }
    prefix.push_back(value);
  }

  // Extends the prefix while exactly one value is admissible, making it
  // maximal.
  void extend_max(BallId& prefix, StatePtr& state) const {
    while (prefix.size() < q_.head.size()) {
      std::vector<ValueId> vals = admissible(*state, prefix, prefix.size());
      if (vals.size() > 1) {
        return;
      }
      bind_position(prefix, state, vals.front());
    }
  }

  StatePtr state_for(const BallId& ball) {
    auto it = states_.find(ball);
    if (it != states_.end()) {
      return it->second;
    }
    // Unseen but well-formed id: rebuild by binding each value in turn.
    auto initial = states_.find(root_);
    if (initial == states_.end() ||
        !std::equal(root_.begin(), root_.end(), ball.begin(),
                    ball.begin() + static_cast<std::ptrdiff_t>(
                                       std::min(root_.size(), ball.size())))) {
      throw InternalError("ball id does not extend the root prefix");
    }
    BallId prefix = root_;
    StatePtr state = initial->second;
    while (prefix.size() < ball.size()) {
      bind_position(prefix, state, ball[prefix.size()]);
      for (const auto& rows : state->rows) {
        if (rows.empty()) {
          throw InternalError("ball id names an unrealizable prefix");
        }
      }
    }
    states_.emplace(ball, state);
    return state;
  }

  ConjunctiveQuery q_;
  const Database* db_;
  JoinTree tree_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::map<BallId, StatePtr> states_;
  BallId root_;
  bool empty_ = true;
};

class BasicChildCursor : public ChildCursor {
 public:
  BasicChildCursor(BasicAcqHandle& handle, BallId parent, StatePtr parent_state,
                   std::vector<ValueId> values)
      : handle_(handle), parent_(std::move(parent)), parent_state_(std::move(parent_state)),
        values_(std::move(values)) {
    position();
  }

  const BallId& current() const override { return current_; }

  bool next() override {
    if (index_ + 1 >= values_.size()) {
      return false;
    }
    ++index_;
    position();
    return true;
  }

 private:
  void position() {
    ++handle_.stats().cursor_steps;
    BallId child = parent_;
    StatePtr state = parent_state_;
    handle_.bind_position(child, state, values_[index_]);
    handle_.extend_max(child, state);
    handle_.states_.emplace(child, std::move(state));
    current_ = std::move(child);
  }

  BasicAcqHandle& handle_;
  BallId parent_;
  StatePtr parent_state_;
  std::vector<ValueId> values_;
  std::size_t index_ = 0;
  BallId current_;
};

std::unique_ptr<ChildCursor> BasicAcqHandle::children(const BallId& ball) {
  if (singleton(ball)) {
    throw InternalError("children requested on a single answer");
  }
  StatePtr state = state_for(ball);
  std::vector<ValueId> vals = admissible(*state, ball, ball.size());
  if (vals.size() < 2) {
    throw InternalError("a maximal prefix ball must split into at least two children");
  }
  return std::make_unique<BasicChildCursor>(*this, ball, std::move(state), std::move(vals));
}

}  // namespace

std::unique_ptr<ImplicitTreeHandle> acq_prefix_tree(ConjunctiveQuery q, const Database& db) {
  return std::make_unique<BasicAcqHandle>(std::move(q), db);
}

}  // namespace divkit
