#include "divkit/diversity.hpp"

#include <algorithm>
#include <bit>

namespace divkit {

Rational delta_sum_pairs(std::size_t n, const PairDistanceFn& d) {
  Rational acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) acc += d(i, j);
  }
  return acc;
}

Rational delta_min_pairs(std::size_t n, const PairDistanceFn& d) {
  if (n < 2) return Rational();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = d(i, j);
      if (!best || v < *best) best = v;
    }
  }
  return *best;
}

Rational delta_sum_min_pairs(std::size_t n, const PairDistanceFn& d) {
  if (n < 2) return Rational();
  Rational acc;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> nearest;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational v = d(i, j);
      if (!nearest || v < *nearest) nearest = v;
    }
    acc += *nearest;
  }
  return acc;
}

Rational delta_weitzman_exact_pairs(std::size_t n, const PairDistanceFn& d, std::size_t cap) {
  if (n > cap) {
    throw CapExceededError(
        "weitzman exact evaluation capped at " + std::to_string(cap) + " elements (got " +
        std::to_string(n) + "); build the ultrametric tree and use the closed-form evaluation");
  }
  if (n < 2) return Rational();

  std::vector<Rational> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) dist[i * n + j] = dist[j * n + i] = d(i, j);
  }

  std::size_t full = std::size_t(1) << n;
  std::vector<Rational> dw(full);

  // nearest[a][mask] = min distance from a into mask; the table keeps the DP
  // quadratic per subset only for set sizes where it fits comfortably.
  bool use_table = n <= 16;
  std::vector<Rational> nearest;
  if (use_table) {
    nearest.resize(n * full);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t mask = 1; mask < full; ++mask) {
        std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
        std::size_t rest = mask & (mask - 1);
        const Rational& direct = dist[a * n + low];
        if (rest == 0 || direct < nearest[a * full + rest]) {
          nearest[a * full + mask] = direct;
        } else {
          nearest[a * full + mask] = nearest[a * full + rest];
        }
      }
    }
  }

  for (std::size_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    Rational best;
    for (std::size_t m = mask; m;) {
      std::size_t a = static_cast<std::size_t>(std::countr_zero(m));
      m &= m - 1;
      std::size_t rest = mask & ~(std::size_t(1) << a);
      Rational near;
      if (use_table) {
        near = nearest[a * full + rest];
      } else {
        bool first = true;
        for (std::size_t r = rest; r;) {
          std::size_t b = static_cast<std::size_t>(std::countr_zero(r));
          r &= r - 1;
          if (first || dist[a * n + b] < near) near = dist[a * n + b];
          first = false;
        }
      }
      Rational v = dw[rest] + near;
      if (best < v) best = v;
    }
    dw[mask] = best;
  }
  return dw[full - 1];
}

namespace {

PairDistanceFn bind_metric(std::span<const ElementId> s, const MetricOracle& d) {
  return [s, &d](std::size_t i, std::size_t j) { return d.distance(s[i], s[j]); };
}

}  // namespace

Rational delta_sum(std::span<const ElementId> s, const MetricOracle& d) {
  return delta_sum_pairs(s.size(), bind_metric(s, d));
}
Rational delta_min(std::span<const ElementId> s, const MetricOracle& d) {
  return delta_min_pairs(s.size(), bind_metric(s, d));
}
Rational delta_sum_min(std::span<const ElementId> s, const MetricOracle& d) {
  return delta_sum_min_pairs(s.size(), bind_metric(s, d));
}
Rational delta_weitzman_exact(std::span<const ElementId> s, const MetricOracle& d,
                              std::size_t cap) {
  return delta_weitzman_exact_pairs(s.size(), bind_metric(s, d), cap);
}

Rational delta_weitzman_ultrametric(const UltrametricTree& t) {
  Rational acc;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (n.children.size() >= 2) {
      acc += n.radius * Rational::from_int(static_cast<std::int64_t>(n.children.size()) - 1);
    }
  }
  return acc;
}

std::string_view DiversityFunction::name() const {
  switch (kind) {
    case DiversityKind::Sum: return "sum";
    case DiversityKind::Min: return "min";
    case DiversityKind::Weitzman: return "weitzman";
    case DiversityKind::SumMin: return "sum-min";
  }
  throw InternalError("bad diversity kind");
}

DiversityFunction DiversityFunction::by_name(std::string_view name) {
  if (name == "sum") return {DiversityKind::Sum};
  if (name == "min") return {DiversityKind::Min};
  if (name == "weitzman") return {DiversityKind::Weitzman};
  if (name == "sum-min") return {DiversityKind::SumMin};
  throw Error("unknown diversity function '" + std::string(name) +
              "' (expected sum, min, weitzman or sum-min)");
}

bool DiversityFunction::subset_monotone(bool ultrametric) const {
  switch (kind) {
    case DiversityKind::Sum:
    case DiversityKind::Min: return true;
    case DiversityKind::Weitzman: return ultrametric;
    case DiversityKind::SumMin: return false;
  }
  throw InternalError("bad diversity kind");
}

bool DiversityFunction::weakly_subset_monotone(bool ultrametric) const {
  if (subset_monotone(ultrametric)) return true;
  return kind == DiversityKind::SumMin && ultrametric;
}

bool DiversityFunction::weakly_monotone(bool ultrametric) const {
  switch (kind) {
    case DiversityKind::Sum:
    case DiversityKind::Min: return true;
    case DiversityKind::Weitzman:
    case DiversityKind::SumMin: return ultrametric;
  }
  throw InternalError("bad diversity kind");
}

Rational DiversityFunction::evaluate(std::span<const ElementId> s, const MetricOracle& d) const {
  switch (kind) {
    case DiversityKind::Sum: return delta_sum(s, d);
    case DiversityKind::Min: return delta_min(s, d);
    case DiversityKind::Weitzman: return delta_weitzman_exact(s, d);
    case DiversityKind::SumMin: return delta_sum_min(s, d);
  }
  throw InternalError("bad diversity kind");
}

Rational DiversityFunction::evaluate_pairs(std::size_t n, const PairDistanceFn& d) const {
  switch (kind) {
    case DiversityKind::Sum: return delta_sum_pairs(n, d);
    case DiversityKind::Min: return delta_min_pairs(n, d);
    case DiversityKind::Weitzman: return delta_weitzman_exact_pairs(n, d);
    case DiversityKind::SumMin: return delta_sum_min_pairs(n, d);
  }
  throw InternalError("bad diversity kind");
}

MonotonicityReport check_monotonicity(const DiversityFunction& delta, MonotonicityClass cls,
                                      const TripleSampler& sampler, std::size_t trials,
                                      std::mt19937_64& rng) {
  MonotonicityReport report;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    MonotonicityTriple t = sampler(rng);
    if (!t.metric) throw InternalError("sampler produced a triple without a metric");
    const MetricOracle& d = *t.metric;
    std::size_t l = t.candidate.size();
    if (l == 0 || t.replacement.size() != l) {
      throw InternalError("sampler produced lists of different or zero size");
    }
    if (cls == MonotonicityClass::Weak && l != 1) {
      throw InternalError("weak monotonicity sampler must produce singletons");
    }
    for (ElementId a : t.base) {
      for (ElementId b : t.candidate) {
        if (a == b) throw InternalError("sampler produced overlapping A and B");
      }
      for (ElementId b : t.replacement) {
        if (a == b) throw InternalError("sampler produced overlapping A and B'");
      }
    }
    for (ElementId a : t.base) {
      for (std::size_t i = 0; i < l; ++i) {
        Rational db = d.distance(a, t.candidate[i]);
        Rational dr = d.distance(a, t.replacement[i]);
        bool ok = cls == MonotonicityClass::WeakSubset ? db == dr : db <= dr;
        if (!ok) throw InternalError("sampler violated the distance hypothesis");
      }
    }
    if (cls != MonotonicityClass::Weak) {
      if (delta.evaluate(t.candidate, d) > delta.evaluate(t.replacement, d)) {
        throw InternalError("sampler violated delta(B) <= delta(B')");
      }
    }

    std::vector<ElementId> with_b = t.base;
    with_b.insert(with_b.end(), t.candidate.begin(), t.candidate.end());
    std::vector<ElementId> with_r = t.base;
    with_r.insert(with_r.end(), t.replacement.begin(), t.replacement.end());
    Rational vb = delta.evaluate(with_b, d);
    Rational vr = delta.evaluate(with_r, d);
    ++report.trials_run;
    if (vb > vr) {
      report.pass = false;
      report.counterexample = std::move(t);
      report.with_candidate = vb;
      report.with_replacement = vr;
      return report;
    }
  }
  return report;
}

}  // namespace divkit
