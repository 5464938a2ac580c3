#include "divkit/elements.hpp"

namespace divkit {

ValueId StringPool::intern(std::string_view s) {
  auto it = index_.find(std::string(s));
  if (it != index_.end()) return it->second;
  ValueId id = static_cast<ValueId>(strings_.size());
  strings_.emplace_back(s);
  index_.emplace(strings_.back(), id);
  return id;
}

ElementId ElementTable::add_tuple(std::string_view relation,
                                  std::span<const std::string> values) {
  ElementPayload p;
  p.relation = static_cast<std::int32_t>(pool_.intern(relation));
  p.values.reserve(values.size());
  for (const auto& v : values) p.values.push_back(pool_.intern(v));
  elements_.push_back(std::move(p));
  return static_cast<ElementId>(elements_.size() - 1);
}

ElementId ElementTable::add_label(std::string_view label) {
  ElementPayload p;
  p.relation = ElementPayload::kLabel;
  p.values.push_back(pool_.intern(label));
  elements_.push_back(std::move(p));
  return static_cast<ElementId>(elements_.size() - 1);
}

std::string ElementTable::describe(ElementId id) const {
  const auto& p = payload(id);
  if (p.relation == ElementPayload::kLabel) return pool_.str(p.values[0]);
  std::string out = pool_.str(static_cast<ValueId>(p.relation));
  out += '(';
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i) out += ',';
    out += pool_.str(p.values[i]);
  }
  out += ')';
  return out;
}

}  // namespace divkit
