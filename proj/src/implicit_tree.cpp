#include "divkit/implicit_tree.hpp"

#include <utility>

#include "divkit/errors.hpp"

namespace divkit {

VectorCursor::VectorCursor(std::vector<BallId> children, HandleStats* stats)
    : children_(std::move(children)), stats_(stats) {
  if (children_.empty()) {
    throw InternalError("child cursor constructed over an empty child list");
  }
  if (stats_ != nullptr) {
    ++stats_->cursor_steps;
  }
}

const BallId& VectorCursor::current() const {
  return children_[index_];
}

bool VectorCursor::next() {
  if (index_ + 1 >= children_.size()) {
    return false;
  }
  ++index_;
  if (stats_ != nullptr) {
    ++stats_->cursor_steps;
  }
  return true;
}

namespace {

class ExplicitBackedHandle : public ImplicitTreeHandle {
 public:
  ExplicitBackedHandle(UltrametricTree tree, const ElementTable* names)
      : tree_(std::move(tree)), names_(names) {
    if (tree_.nodes.empty()) {
      throw PreconditionError("implicit handle over an empty tree");
    }
  }

  BallId root() override {
    return {static_cast<std::uint32_t>(tree_.root)};
  }

  std::unique_ptr<ChildCursor> children(const BallId& ball) override {
    const auto& node = node_of(ball);
    if (node.children.empty()) {
      throw InternalError("children requested on a leaf ball");
    }
    std::vector<BallId> out;
    out.reserve(node.children.size());
    for (std::int32_t child : node.children) {
      out.push_back({static_cast<std::uint32_t>(child)});
    }
    return std::make_unique<VectorCursor>(std::move(out), &stats_);
  }

  Solution member(const BallId& ball) override {
    ++stats_.members_materialized;
    const auto& node = node_of(ball);
    return {static_cast<std::uint32_t>(node.min_leaf)};
  }

  bool singleton(const BallId& ball) override {
    return node_of(ball).children.empty();
  }

  Rational distance(const Solution& a, const Solution& b) const override {
    if (a.size() != 1 || b.size() != 1) {
      throw InternalError("explicit-backed solutions are single element ids");
    }
    return tree_.lca_radius(static_cast<ElementId>(a[0]), static_cast<ElementId>(b[0]));
  }

  std::string describe(const Solution& s) const override {
    if (s.size() != 1) {
      throw InternalError("explicit-backed solutions are single element ids");
    }
    if (names_ != nullptr) {
      return names_->describe(static_cast<ElementId>(s[0]));
    }
    return "e" + std::to_string(s[0]);
  }

 private:
  const UltrametricTree::Node& node_of(const BallId& ball) const {
    if (ball.size() != 1 || ball[0] >= tree_.nodes.size()) {
      throw InternalError("malformed ball id for explicit-backed handle");
    }
    return tree_.nodes[ball[0]];
  }

  UltrametricTree tree_;
  const ElementTable* names_;
};

}  // namespace

std::unique_ptr<ImplicitTreeHandle> explicit_backed_handle(UltrametricTree tree,
                                                           const ElementTable* names) {
  return std::make_unique<ExplicitBackedHandle>(std::move(tree), names);
}

}  // namespace divkit
