#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "divkit/elements.hpp"
#include "divkit/rational.hpp"

namespace divkit {

// Pairwise distance oracle over element ids of one universe.
class MetricOracle {
 public:
  virtual ~MetricOracle() = default;
  virtual Rational distance(ElementId a, ElementId b) const = 0;
};

// Tuple distance: 0 on identical tuples, 1 across relation names, else
// 2^-i where i is the first (1-based) argument position that differs.
Rational urel_distance(const ElementPayload& a, const ElementPayload& b);

// Count of differing positions; arity mismatch is an error.
Rational hamming_distance(const ElementPayload& a, const ElementPayload& b);

class UrelMetric : public MetricOracle {
 public:
  explicit UrelMetric(const ElementTable& table) : table_(&table) {}
  Rational distance(ElementId a, ElementId b) const override {
    return urel_distance(table_->payload(a), table_->payload(b));
  }

 private:
  const ElementTable* table_;
};

class HammingMetric : public MetricOracle {
 public:
  explicit HammingMetric(const ElementTable& table) : table_(&table) {}
  Rational distance(ElementId a, ElementId b) const override {
    return hamming_distance(table_->payload(a), table_->payload(b));
  }

 private:
  const ElementTable* table_;
};

// Dense symmetric table over n elements.
class TableMetric : public MetricOracle {
 public:
  explicit TableMetric(std::size_t n);
  void set(ElementId a, ElementId b, Rational d);
  Rational distance(ElementId a, ElementId b) const override;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Rational> cells_;
  std::vector<bool> present_;
};

class FnMetric : public MetricOracle {
 public:
  explicit FnMetric(std::function<Rational(ElementId, ElementId)> fn) : fn_(std::move(fn)) {}
  Rational distance(ElementId a, ElementId b) const override { return fn_(a, b); }

 private:
  std::function<Rational(ElementId, ElementId)> fn_;
};

// CSV with header "a,b,num,den". Missing pairs default by symmetry and
// d(a,a)=0; a pair with no value in either direction is an error. Element
// labels become table elements in first-appearance order.
struct LoadedTableMetric {
  ElementTable elements;
  TableMetric metric;
};
LoadedTableMetric load_table_metric_csv(const std::string& path);
LoadedTableMetric parse_table_metric_csv(const std::string& text);

struct UltrametricCheck {
  bool ok = true;
  // a,b,c with d(a,c) > max(d(a,b), d(b,c)) when ok is false.
  std::optional<std::array<ElementId, 3>> witness;
};
UltrametricCheck is_ultrametric(std::span<const ElementId> elements, const MetricOracle& d);

struct MetricCheck {
  bool ok = true;
  std::string violation;  // empty when ok
};
// Identity of indiscernibles, symmetry, triangle inequality on all triples.
MetricCheck check_metric(std::span<const ElementId> elements, const MetricOracle& d);

}  // namespace divkit
