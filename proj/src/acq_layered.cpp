#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "divkit/acq_handles.hpp"
#include "divkit/errors.hpp"

namespace divkit {

LayeredEligibility layered_eligibility(const ConjunctiveQuery& q) {
  if (!is_acyclic(q)) {
    return {false, "the query is not acyclic"};
  }
  if (q.head_repeats()) {
    return {false, "the head repeats a variable"};
  }
  if (!is_free_connex(q)) {
    return {false, "the query is not free-connex"};
  }
  if (auto trio = find_disruptive_trio(q)) {
    return {false, "head positions (" + std::to_string((*trio)[0]) + ", " +
                       std::to_string((*trio)[1]) + ", " + std::to_string((*trio)[2]) +
                       ") form a disruptive trio"};
  }
  return {true, ""};
}

namespace {

// Lookup table for one head position: key = the values bound at the
// earlier head positions whose variables co-occur with this one; result =
// the admissible values, ascending by string. Built once from the
// reduced copy of an atom that covers all involved variables (one exists
// because the trio-free primal graph makes them a clique and acyclicity
// keeps cliques inside atoms).
struct Layer {
  std::vector<std::size_t> key_positions;
  std::map<Row, std::vector<ValueId>> values;
  std::size_t source_atom = 0;
};

class LayeredAcqHandle : public ImplicitTreeHandle {
 public:
  LayeredAcqHandle(ConjunctiveQuery q, const Database& db) : q_(std::move(q)), db_(&db) {
    LayeredEligibility ok = layered_eligibility(q_);
    if (!ok.eligible) {
      throw PreconditionError(ok.reason);
    }
    auto built = build_join_tree(q_);
    AtomCopies reduced = yannakakis_reduce(q_, *db_, std::get<JoinTree>(built));
    empty_ = false;
    for (const auto& rows : reduced.rows) {
      empty_ = empty_ || rows.empty();
    }
    build_layers(reduced);
    if (!empty_) {
      root_ = extend_max({});
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
    BallId prefix = ball;
    while (prefix.size() < q_.head.size()) {
      prefix.push_back(admissible(prefix, prefix.size()).front());
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

  const std::vector<Layer>& layers() const { return layers_; }

 private:
  friend class LayeredChildCursor;

  void build_layers(const AtomCopies& reduced) {
    const std::size_t arity = q_.head.size();
    layers_.resize(arity);
    for (std::size_t p = 0; p < arity; ++p) {
      Layer& layer = layers_[p];
      const std::uint32_t var = q_.head_var[p];
      std::vector<std::uint32_t> group;  // variables of the lookup key
      for (std::size_t r = 0; r < p; ++r) {
        if (co_occur(q_.head_var[r], var)) {
          layer.key_positions.push_back(r);
          group.push_back(q_.head_var[r]);
        }
      }
      group.push_back(var);

      std::size_t atom = q_.atoms.size();
      for (std::size_t a = 0; a < q_.atoms.size() && atom == q_.atoms.size(); ++a) {
        bool covers = true;
        for (std::uint32_t v : group) {
          bool found = false;
          for (std::uint32_t w : q_.atom_vars[a]) {
            found = found || w == v;
          }
          covers = covers && found;
        }
        if (covers) {
          atom = a;
        }
      }
      if (atom == q_.atoms.size()) {
        throw InternalError("no atom covers a layer's variable group");
      }
      layer.source_atom = atom;

      std::vector<std::size_t> key_cols;
      for (std::size_t r : layer.key_positions) {
        key_cols.push_back(column_of(atom, q_.head_var[r]));
      }
      const std::size_t val_col = column_of(atom, var);
      for (const Row& row : reduced.rows[atom]) {
        Row key;
        key.reserve(key_cols.size());
        for (std::size_t c : key_cols) {
          key.push_back(row[c]);
        }
        layer.values[std::move(key)].push_back(row[val_col]);
      }
      for (auto& [key, vals] : layer.values) {
        std::sort(vals.begin(), vals.end(),
                  [this](ValueId a, ValueId b) { return db_->value_less(a, b); });
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      }
    }
  }

  bool co_occur(std::uint32_t a, std::uint32_t b) const {
    for (const auto& vars : q_.atom_vars) {
      bool has_a = false, has_b = false;
      for (std::uint32_t v : vars) {
        has_a = has_a || v == a;
        has_b = has_b || v == b;
      }
      if (has_a && has_b) {
        return true;
      }
    }
    return false;
  }

  std::size_t column_of(std::size_t atom, std::uint32_t var) const {
    for (std::size_t i = 0; i < q_.atom_vars[atom].size(); ++i) {
      if (q_.atom_vars[atom][i] == var) {
        return i;
      }
    }
    throw InternalError("variable missing from its covering atom");
  }

  const std::vector<ValueId>& admissible(const BallId& prefix, std::size_t pos) const {
    const Layer& layer = layers_[pos];
    Row key;
    key.reserve(layer.key_positions.size());
    for (std::size_t r : layer.key_positions) {
      key.push_back(prefix[r]);
    }
    auto it = layer.values.find(key);
    if (it == layer.values.end() || it->second.empty()) {
      throw InternalError("no admissible value for a realizable prefix");
    }
    return it->second;
  }

  BallId extend_max(BallId prefix) const {
    while (prefix.size() < q_.head.size()) {
      const std::vector<ValueId>& vals = admissible(prefix, prefix.size());
      if (vals.size() > 1) {
        break;
      }
      prefix.push_back(vals.front());
    }
    return prefix;
  }

  ConjunctiveQuery q_;
  const Database* db_;
  std::vector<Layer> layers_;
  BallId root_;
  bool empty_ = true;
};

class LayeredChildCursor : public ChildCursor {
 public:
  LayeredChildCursor(LayeredAcqHandle& handle, BallId parent, const std::vector<ValueId>& values)
      : handle_(handle), parent_(std::move(parent)), values_(values) {
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
    child.push_back(values_[index_]);
    current_ = handle_.extend_max(std::move(child));
  }

  LayeredAcqHandle& handle_;
  BallId parent_;
  const std::vector<ValueId>& values_;
  std::size_t index_ = 0;
  BallId current_;
};

std::unique_ptr<ChildCursor> LayeredAcqHandle::children(const BallId& ball) {
  if (singleton(ball)) {
    throw InternalError("children requested on a single answer");
  }
  const std::vector<ValueId>& vals = admissible(ball, ball.size());
  if (vals.size() < 2) {
    throw InternalError("a maximal prefix ball must split into at least two children");
  }
  return std::make_unique<LayeredChildCursor>(*this, ball, vals);
}

}  // namespace

std::unique_ptr<ImplicitTreeHandle> layered_prefix_tree(ConjunctiveQuery q, const Database& db) {
  return std::make_unique<LayeredAcqHandle>(std::move(q), db);
}

DiverseResult weitzman_fast_acq(const ConjunctiveQuery& q, const Database& db, std::size_t k,
                                SolverStats* stats, HandleStats* handle_stats) {
  if (k < 2) {
    throw PreconditionError("k must be at least 2");
  }
  SolverStats local;
  SolverStats& st = stats != nullptr ? *stats : local;

  auto handle = layered_prefix_tree(q, db);
  const std::size_t arity = q.head.size();

  struct Entry {
    BallId ball;
    std::unique_ptr<ChildCursor> cursor;
    std::vector<BallId> seen;
  };
  auto open_ball = [&](BallId ball) {
    Entry e;
    e.ball = std::move(ball);
    e.cursor = handle->children(e.ball);
    e.seen.push_back(e.cursor->current());
    if (!e.cursor->next()) {
      throw InternalError("non-singleton ball reported a single child");
    }
    e.seen.push_back(e.cursor->current());
    return e;
  };

  BallId root = handle->root();
  DiverseResult result;
  result.picks.push_back(handle->member(root));

  // Non-singleton prefixes are shorter than the arity, so bucket indexes
  // run over prefix lengths 0..arity-1.
  std::vector<std::deque<Entry>> buckets(std::max<std::size_t>(arity, 1));
  std::uint64_t in_frontier = 0;
  if (!handle->singleton(root)) {
    buckets[root.size()].push_back(open_ball(root));
    ++in_frontier;
  }
  st.max_frontier = std::max(st.max_frontier, in_frontier);

  while (result.picks.size() < k) {
    std::size_t len = 0;
    while (len < buckets.size() && buckets[len].empty()) {
      ++len;
    }
    if (len == buckets.size()) {
      throw PreconditionError("the query has fewer than k answers");
    }
    Entry& entry = buckets[len].front();
    result.picks.push_back(handle->member(entry.cursor->current()));
    // The candidate's distance to every earlier pick is the frontier
    // ball's radius, so no diversity evaluation is needed.
    result.value = result.value + Rational::inverse_pow(2, static_cast<unsigned>(len) + 1);
    ++st.incremental_updates;

    if (entry.cursor->next()) {
      entry.seen.push_back(entry.cursor->current());
    } else {
      ++st.balls_expanded;
      std::vector<BallId> children = std::move(entry.seen);
      buckets[len].pop_front();
      --in_frontier;
      for (BallId& child : children) {
        if (!handle->singleton(child)) {
          const std::size_t child_len = child.size();
          buckets[child_len].push_back(open_ball(std::move(child)));
          ++in_frontier;
        }
      }
      st.max_frontier = std::max(st.max_frontier, in_frontier);
    }
  }
  if (handle_stats != nullptr) {
    *handle_stats = handle->stats();
  }
  return result;
}

}  // namespace divkit
