#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string_view>

#include "divkit/metric.hpp"
#include "divkit/ultrametric_tree.hpp"

namespace divkit {

// Pairwise distances by position for evaluating a diversity function over an
// ad-hoc candidate list without an element universe.
using PairDistanceFn = std::function<Rational(std::size_t, std::size_t)>;

inline constexpr std::size_t kWeitzmanExactCap = 20;

// Sum over unordered pairs, so the two-element set has value d(a,b).
Rational delta_sum(std::span<const ElementId> s, const MetricOracle& d);
// Minimum over distinct pairs; 0 on singletons.
Rational delta_min(std::span<const ElementId> s, const MetricOracle& d);
// Sum over elements of the distance to the nearest other element; 0 on
// singletons. Note the two-element set gets 2*d(a,b).
Rational delta_sum_min(std::span<const ElementId> s, const MetricOracle& d);
// Exact subset-DP evaluation of the recursive max-removal diversity;
// exponential in |s|, refuses sets above cap.
Rational delta_weitzman_exact(std::span<const ElementId> s, const MetricOracle& d,
                              std::size_t cap = kWeitzmanExactCap);
// Same diversity in closed form over an ultrametric ball tree:
// sum of radius(B) * (children(B)-1) over internal balls.
Rational delta_weitzman_ultrametric(const UltrametricTree& t);

Rational delta_sum_pairs(std::size_t n, const PairDistanceFn& d);
Rational delta_min_pairs(std::size_t n, const PairDistanceFn& d);
Rational delta_sum_min_pairs(std::size_t n, const PairDistanceFn& d);
Rational delta_weitzman_exact_pairs(std::size_t n, const PairDistanceFn& d,
                                    std::size_t cap = kWeitzmanExactCap);

enum class DiversityKind { Sum, Min, Weitzman, SumMin };

// A diversity function plus its declared monotonicity properties, some of
// which hold only when the metric is an ultrametric.
struct DiversityFunction {
  DiversityKind kind = DiversityKind::Sum;

  std::string_view name() const;
  static DiversityFunction by_name(std::string_view name);  // throws Error on unknown

  bool subset_monotone(bool ultrametric) const;
  bool weakly_subset_monotone(bool ultrametric) const;
  bool weakly_monotone(bool ultrametric) const;

  Rational evaluate(std::span<const ElementId> s, const MetricOracle& d) const;
  Rational evaluate_pairs(std::size_t n, const PairDistanceFn& d) const;
};

enum class MonotonicityClass { Subset, WeakSubset, Weak };

// One sampled hypothesis instance: base set A, candidate list B and
// replacement list B' paired by index, all over the given metric.
struct MonotonicityTriple {
  std::vector<ElementId> base;
  std::vector<ElementId> candidate;
  std::vector<ElementId> replacement;
  const MetricOracle* metric = nullptr;
};
using TripleSampler = std::function<MonotonicityTriple(std::mt19937_64&)>;

struct MonotonicityReport {
  bool pass = true;
  std::size_t trials_run = 0;
  std::optional<MonotonicityTriple> counterexample;
  Rational with_candidate, with_replacement;  // the violating values
};

// Runs the sampler `trials` times, verifies the class hypotheses on each
// triple (a sampler that breaks them is an internal error), and checks
// delta(A u B) <= delta(A u B'). Stops at the first violation.
MonotonicityReport check_monotonicity(const DiversityFunction& delta, MonotonicityClass cls,
                                      const TripleSampler& sampler, std::size_t trials,
                                      std::mt19937_64& rng);

}  // namespace divkit
