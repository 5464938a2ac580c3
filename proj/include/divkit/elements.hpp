#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "divkit/errors.hpp"

namespace divkit {

using ElementId = std::uint32_t;
using ValueId = std::uint32_t;

// Interns strings to dense ids. Equality is id equality; ordering helpers
// compare the original strings so enumeration order is independent of
// insertion order.
class StringPool {
 public:
  ValueId intern(std::string_view s);
  const std::string& str(ValueId id) const { return strings_.at(id); }
  std::size_t size() const { return strings_.size(); }
  bool less(ValueId a, ValueId b) const { return strings_[a] < strings_[b]; }

 private:
  std::vector<std::string> strings_;
  std::unordered_map<std::string, ValueId> index_;
};

// One element of an instance universe: either a relational tuple
// (relation name + value sequence) or an opaque label.
struct ElementPayload {
  static constexpr std::int32_t kLabel = -1;
  std::int32_t relation = kLabel;  // interned relation name, or kLabel
  std::vector<ValueId> values;     // tuple values, or {label}
};

// Dense 0-based universe; ids are assigned in ingestion order.
class ElementTable {
 public:
  ElementId add_tuple(std::string_view relation, std::span<const std::string> values);
  ElementId add_label(std::string_view label);

  std::size_t size() const { return elements_.size(); }
  const ElementPayload& payload(ElementId id) const { return elements_.at(id); }
  const StringPool& pool() const { return pool_; }
  StringPool& pool() { return pool_; }

  // Human-readable rendering: "R(a,b,c)" or the bare label.
  std::string describe(ElementId id) const;

 private:
  StringPool pool_;
  std::vector<ElementPayload> elements_;
};

}  // namespace divkit
