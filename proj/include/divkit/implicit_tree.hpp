#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "divkit/elements.hpp"
#include "divkit/rational.hpp"
#include "divkit/ultrametric_tree.hpp"

namespace divkit {

// Backend-specific compact ball identifier: a short word sequence whose
// encoding is canonical, so equality of ids is equality of balls.
using BallId = std::vector<std::uint32_t>;
// One element of the implicitly represented set, in the backend's encoding.
using Solution = std::vector<std::uint32_t>;

// Stateful iterator over the children of one ball, positioned at the first
// child after construction. Enumeration order is the backend's canonical
// child order.
class ChildCursor {
 public:
  virtual ~ChildCursor() = default;
  virtual const BallId& current() const = 0;
  virtual bool next() = 0;
};

struct HandleStats {
  std::uint64_t cursor_steps = 0;
  std::uint64_t members_materialized = 0;
};

// Implicit ultrametric ball tree over a finite solution set. Callers only
// pass ball ids previously produced by the same handle. Every backend
// guarantees member(B) == member(first child of B) for non-singleton B.
class ImplicitTreeHandle {
 public:
  virtual ~ImplicitTreeHandle() = default;

  virtual BallId root() = 0;
  // Must only be called on non-singleton balls.
  virtual std::unique_ptr<ChildCursor> children(const BallId& ball) = 0;
  virtual Solution member(const BallId& ball) = 0;
  // Size hint: true when the ball is a single solution.
  virtual bool singleton(const BallId& ball) = 0;

  // The ultrametric the tree represents.
  virtual Rational distance(const Solution& a, const Solution& b) const = 0;
  virtual std::string describe(const Solution& s) const = 0;

  HandleStats& stats() { return stats_; }
  const HandleStats& stats() const { return stats_; }

 protected:
  HandleStats stats_;
};

// Cursor over a pre-materialized child list; fine for backends whose
// children are already explicit.
class VectorCursor : public ChildCursor {
 public:
  explicit VectorCursor(std::vector<BallId> children, HandleStats* stats);
  const BallId& current() const override;
  bool next() override;

 private:
  std::vector<BallId> children_;
  std::size_t index_ = 0;
  HandleStats* stats_;
};

// Adapts an explicit ultrametric tree to the implicit interface. Ball ids
// are tree node indices; solutions are element ids; member is the smallest
// element id in the ball. The optional table is only used for describe().
std::unique_ptr<ImplicitTreeHandle> explicit_backed_handle(UltrametricTree tree,
                                                           const ElementTable* names = nullptr);

}  // namespace divkit
