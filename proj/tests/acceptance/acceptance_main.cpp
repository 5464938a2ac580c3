// Acceptance gate for the k-diverse-subset artifact. Each criterion prints
// one [PASS]/[FAIL] line; the process exits nonzero when any line fails.
// Instance counts, scales, and deadlines are pinned here on purpose.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "divkit/acq_handles.hpp"
#include "divkit/cq.hpp"
#include "divkit/database.hpp"
#include "divkit/diversity.hpp"
#include "divkit/elements.hpp"
#include "divkit/errors.hpp"
#include "divkit/explicit_solver.hpp"
#include "divkit/hardness.hpp"
#include "divkit/implicit_solver.hpp"
#include "divkit/implicit_tree.hpp"
#include "divkit/join_tree.hpp"
#include "divkit/metric.hpp"
#include "divkit/rational.hpp"
#include "divkit/ultrametric_tree.hpp"
#include "divkit/yannakakis.hpp"
#include "support/test_support.hpp"

using namespace divkit;
using namespace divkit::testing;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned workload sizes.
constexpr std::size_t kExplicitOracleInstances = 500;
constexpr std::size_t kImplicitOracleInstances = 200;  // per backend family
constexpr std::size_t kMetricHardnessGraphs = 1000;
constexpr std::size_t kTupleHardnessGraphs = 500;
constexpr std::size_t kIdentityInstances = 1000;
constexpr std::size_t kAcqInstances = 500;
constexpr std::size_t kLayeredSupplement = 100;
constexpr std::size_t kFastPathInstances = 150;
constexpr std::size_t kMonotonicityTrials = 10000;

// Pinned deadlines, in seconds.
constexpr double kCarsDeadline = 1.0;
constexpr double kExplicitOracleDeadline = 60.0;
constexpr double kCrossProductDeadline = 5.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f s", s);
  return buf;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

const DiversityFunction kSum = DiversityFunction::by_name("sum");
const DiversityFunction kMin = DiversityFunction::by_name("min");
const DiversityFunction kWeitzman = DiversityFunction::by_name("weitzman");
const DiversityFunction kSumMin = DiversityFunction::by_name("sum-min");

// ------------------------------------------------------------ criterion 1

// A ball family as comparable data: (radius, member rows rendered as text).
using BallKey = std::pair<Rational, std::multiset<std::string>>;

std::string render_row(const StringPool& pool, std::span<const ValueId> values) {
  std::string out;
  for (ValueId v : values) {
    out += pool.str(v);
    out += '|';
  }
  return out;
}

Outcome criterion_cars() {
  Clock::time_point t0 = Clock::now();

  ElementTable table = cars_table();
  std::vector<ElementId> ids = all_elements(table.size());
  UrelMetric metric(table);
  UltrametricTree tree = build_ultrametric_tree(ids, metric);

  std::multiset<BallKey> from_tree;
  for (const TreeBall& ball : tree_balls(tree)) {
    std::multiset<std::string> rows;
    for (ElementId id : ball.members) {
      rows.insert(render_row(table.pool(), table.payload(id).values));
    }
    from_tree.insert({ball.radius, std::move(rows)});
  }

  Database db = cars_database();
  ConjunctiveQuery q = parse_cq(cars_query_text());
  std::unique_ptr<ImplicitTreeHandle> handle = acq_prefix_tree(q, db);
  std::multiset<BallKey> from_handle;
  for (const HandleBall& ball : handle_balls(*handle, 64)) {
    std::multiset<std::string> rows;
    for (const Solution& s : ball.members) {
      rows.insert(render_row(db.pool(), std::vector<ValueId>(s.begin(), s.end())));
    }
    from_handle.insert({ball.radius, std::move(rows)});
  }

  // Ground truth: the five balls of the running example.
  std::vector<std::pair<Rational, std::vector<ElementId>>> expected_groups = {
      {Rational(1, 16), {1, 2}},
      {Rational(1, 8), {0, 1, 2}},
      {Rational(1, 8), {4, 5}},
      {Rational(1, 4), {0, 1, 2, 3}},
      {Rational(1, 2), {0, 1, 2, 3, 4, 5}},
  };
  std::multiset<BallKey> expected;
  for (const auto& [radius, members] : expected_groups) {
    std::multiset<std::string> rows;
    for (ElementId id : members) {
      rows.insert(render_row(table.pool(), table.payload(id).values));
    }
    expected.insert({radius, std::move(rows)});
  }

  double elapsed = seconds_since(t0);
  bool ok = from_tree == expected && from_handle == expected && elapsed < kCarsDeadline;
  std::ostringstream detail;
  detail << "radii {1/2, 1/4, 1/8, 1/8, 1/16} via both builders, " << fmt_seconds(elapsed);
  if (from_tree != expected) detail << "; explicit tree family differs";
  if (from_handle != expected) detail << "; prefix-tree family differs";
  if (elapsed >= kCarsDeadline) detail << "; over the " << fmt_seconds(kCarsDeadline) << " deadline";
  return {ok, detail.str()};
}

// ------------------------------------------------------------ criterion 2

Outcome criterion_explicit_oracle() {
  Clock::time_point t0 = Clock::now();
  std::mt19937_64 rng(9202);
  const DiversityFunction functions[] = {kSum, kMin, kWeitzman, kSumMin};

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kExplicitOracleInstances; ++i) {
    std::size_t n = pick(rng, 2, 12);
    UltrametricInstance inst = random_ultrametric(rng, n);
    std::size_t k = pick(rng, 2, std::min<std::size_t>(5, n));
    for (const DiversityFunction& fn : functions) {
      ExplicitSolveResult dp = solve_explicit_dp(inst.elements, *inst.metric, k, fn);
      ExplicitSolveResult oracle = brute_force_oracle(inst.elements, *inst.metric, k, fn);
      bool same = dp.value == oracle.value && dp.subset.size() == k &&
                  fn.evaluate(dp.subset, *inst.metric) == dp.value;
      if (!same) ++mismatches;
    }
  }

  double elapsed = seconds_since(t0);
  bool ok = mismatches == 0 && elapsed < kExplicitOracleDeadline;
  std::ostringstream detail;
  detail << kExplicitOracleInstances << " instances x 4 functions, " << mismatches
         << " mismatches, " << fmt_seconds(elapsed);
  if (elapsed >= kExplicitOracleDeadline) detail << " (over the 60 s deadline)";
  return {ok, detail.str()};
}

// ------------------------------------------------------------ criterion 3

Outcome criterion_implicit_oracle() {
  std::mt19937_64 rng(9203);
  std::size_t mismatches = 0;

  for (std::size_t i = 0; i < kImplicitOracleInstances; ++i) {
    std::size_t n = pick(rng, 2, 12);
    UltrametricInstance inst = random_ultrametric(rng, n);
    std::size_t k = pick(rng, 2, std::min<std::size_t>(5, n));
    for (const DiversityFunction& fn : {kSum, kMin, kWeitzman}) {
      std::unique_ptr<ImplicitTreeHandle> h = explicit_backed_handle(*inst.tree);
      DiverseResult got = greedy_diverse(*h, k, fn);
      if (got.value != brute_force_oracle(inst.elements, *inst.metric, k, fn).value) ++mismatches;
    }
    std::unique_ptr<ImplicitTreeHandle> h = explicit_backed_handle(*inst.tree);
    DiverseResult got = fpt_diverse(*h, k, kSumMin);
    if (got.value != brute_force_oracle(inst.elements, *inst.metric, k, kSumMin).value) {
      ++mismatches;
    }
  }

  AcqOptions opts;
  opts.max_atoms = 4;
  opts.max_rows_per_atom = 6;
  std::size_t accepted = 0, attempts = 0;
  while (accepted < kImplicitOracleInstances) {
    if (++attempts > kImplicitOracleInstances * 60) {
      return {false, "ACQ sampling stalled before reaching the instance quota"};
    }
    AcqInstance inst = random_acq(rng, opts);
    std::vector<Row> answers = evaluate_acq(inst.query, inst.db);
    if (answers.size() < 2 || answers.size() > 12) continue;
    ++accepted;

    std::size_t k = pick(rng, 2, std::min<std::size_t>(5, answers.size()));
    FnMetric metric([&answers](ElementId a, ElementId b) {
      return answer_urel_distance(answers[a], answers[b]);
    });
    std::vector<ElementId> ids = all_elements(answers.size());
    for (const DiversityFunction& fn : {kSum, kMin, kWeitzman}) {
      std::unique_ptr<ImplicitTreeHandle> h = acq_prefix_tree(inst.query, inst.db);
      DiverseResult got = greedy_diverse(*h, k, fn);
      if (got.value != brute_force_oracle(ids, metric, k, fn).value) ++mismatches;
    }
    std::unique_ptr<ImplicitTreeHandle> h = acq_prefix_tree(inst.query, inst.db);
    DiverseResult got = fpt_diverse(*h, k, kSumMin);
    if (got.value != brute_force_oracle(ids, metric, k, kSumMin).value) ++mismatches;
  }

  std::ostringstream detail;
  detail << kImplicitOracleInstances << " explicit-backed + " << kImplicitOracleInstances
         << " ACQ-backed instances, " << mismatches << " mismatches";
  return {mismatches == 0, detail.str()};
}

// ------------------------------------------------------------ criterion 4

Graph random_graph(std::mt19937_64& rng, std::size_t max_n) {
  Graph g;
  g.n = pick(rng, 1, max_n);
  std::size_t density = pick(rng, 1, 3);  // edge probability density/4
  for (unsigned u = 1; u <= g.n; ++u) {
    for (unsigned v = u + 1; v <= g.n; ++v) {
      if (pick(rng, 1, 4) <= density) g.edges.push_back({u, v});
    }
  }
  return g;
}

Graph random_degree3_graph(std::mt19937_64& rng, std::size_t max_n) {
  Graph g;
  g.n = pick(rng, 1, max_n);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned u = 1; u <= g.n; ++u) {
    for (unsigned v = u + 1; v <= g.n; ++v) pairs.push_back({u, v});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<unsigned> degree(g.n + 1, 0);
  for (auto [u, v] : pairs) {
    if (degree[u] < 3 && degree[v] < 3 && pick(rng, 1, 3) <= 2) {
      g.edges.push_back({u, v});
      ++degree[u];
      ++degree[v];
    }
  }
  return g;
}

Outcome criterion_hardness() {
  std::mt19937_64 rng(9205);
  std::size_t metric_failures = 0, tuple_failures = 0;

  for (std::size_t i = 0; i < kMetricHardnessGraphs; ++i) {
    Graph g = random_graph(rng, 8);
    std::size_t k = pick(rng, 1, g.n);
    MetricHardnessInstance inst = is_to_metric_instance(g, k);
    std::vector<ElementId> ids = all_elements(g.n);
    bool reaches = delta_weitzman_exact(ids, inst.metric) >= inst.threshold;
    if (reaches != exact_independent_set(g, k)) ++metric_failures;
  }

  for (std::size_t i = 0; i < kTupleHardnessGraphs; ++i) {
    Graph g = random_degree3_graph(rng, 10);
    std::size_t k = pick(rng, 1, g.n);
    TupleHardnessInstance inst = is_to_tuple_instance(g, k);
    HammingMetric metric(inst.elements);
    std::vector<ElementId> ids = all_elements(inst.elements.size());
    bool reaches = delta_weitzman_exact(ids, metric) >= inst.threshold;
    if (reaches != exact_independent_set(g, k)) ++tuple_failures;
  }

  std::ostringstream detail;
  detail << kMetricHardnessGraphs << " metric graphs (n <= 8) and " << kTupleHardnessGraphs
         << " degree-<=3 tuple graphs (n <= 10), " << metric_failures + tuple_failures
         << " equivalence failures";
  return {metric_failures == 0 && tuple_failures == 0, detail.str()};
}

// ------------------------------------------------------------ criterion 5

Outcome criterion_weitzman_identities() {
  std::mt19937_64 rng(9207);
  std::size_t failures = 0;

  for (std::size_t i = 0; i < kIdentityInstances; ++i) {
    std::size_t n = pick(rng, 2, 14);
    UltrametricInstance inst = random_ultrametric(rng, n);

    Rational exact = delta_weitzman_exact(inst.elements, *inst.metric);
    Rational closed = delta_weitzman_ultrametric(*inst.tree);
    if (exact != closed) {
      ++failures;
      continue;
    }

    // Every removal is a maximizing removal on an ultrametric.
    std::size_t spot = pick(rng, 0, n - 1);
    bool all_match = true;
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<ElementId> rest;
      Rational nearest;
      bool first = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == drop) continue;
        rest.push_back(inst.elements[j]);
        Rational d = inst.metric->distance(inst.elements[drop], inst.elements[j]);
        if (first || d < nearest) nearest = d;
        first = false;
      }
      UltrametricTree rest_tree = build_ultrametric_tree(rest, *inst.metric);
      Rational rest_value = delta_weitzman_ultrametric(rest_tree);
      if (closed != rest_value + nearest) all_match = false;
      if (drop == spot && rest_value != delta_weitzman_exact(rest, *inst.metric)) {
        all_match = false;
      }
    }
    if (!all_match) ++failures;
  }

  std::ostringstream detail;
  detail << kIdentityInstances << " instances (|S| <= 14), closed form vs exact plus the "
         << "every-removal identity, " << failures << " failures";
  return {failures == 0, detail.str()};
}

// ------------------------------------------------------------ criterion 6

std::vector<Row> leaves_as_rows(ImplicitTreeHandle& h, std::size_t cap) {
  std::vector<Row> rows;
  for (const Solution& s : enumerate_leaves(h, cap)) {
    rows.emplace_back(s.begin(), s.end());
  }
  return rows;
}

Outcome criterion_acq_engines() {
  std::mt19937_64 rng(9208);
  std::size_t eval_failures = 0, leaf_failures = 0, layered_failures = 0;
  std::size_t layered_checked = 0;

  auto check_layered = [&](const AcqInstance& inst, const std::vector<Row>& answers) {
    ++layered_checked;
    std::unique_ptr<ImplicitTreeHandle> basic = acq_prefix_tree(inst.query, inst.db);
    std::unique_ptr<ImplicitTreeHandle> layered = layered_prefix_tree(inst.query, inst.db);
    if (leaves_as_rows(*layered, answers.size() + 1) != answers) {
      ++layered_failures;
      return;
    }
    if (answers.size() < 2) return;
    std::size_t k = pick(rng, 2, std::min<std::size_t>(4, answers.size()));
    for (const DiversityFunction& fn : {kWeitzman, kMin}) {
      std::unique_ptr<ImplicitTreeHandle> b = acq_prefix_tree(inst.query, inst.db);
      std::unique_ptr<ImplicitTreeHandle> l = layered_prefix_tree(inst.query, inst.db);
      if (greedy_diverse(*b, k, fn).value != greedy_diverse(*l, k, fn).value) {
        ++layered_failures;
      }
    }
  };

  for (std::size_t i = 0; i < kAcqInstances; ++i) {
    AcqInstance inst = random_acq(rng);  // <= 5 atoms x <= 8 rows: <= 40 tuples
    std::vector<Row> answers = evaluate_acq(inst.query, inst.db);
    if (answers != naive_join(inst.query, inst.db)) {
      ++eval_failures;
      continue;
    }
    if (!answers.empty()) {
      std::unique_ptr<ImplicitTreeHandle> basic = acq_prefix_tree(inst.query, inst.db);
      if (leaves_as_rows(*basic, answers.size() + 1) != answers) ++leaf_failures;
    }
    if (!answers.empty() && layered_eligibility(inst.query).eligible) {
      check_layered(inst, answers);
    }
  }

  for (std::size_t i = 0; i < kLayeredSupplement; ++i) {
    AcqOptions opts;
    opts.min_answers = 1;
    AcqInstance inst = random_layered_acq(rng, opts);
    std::vector<Row> answers = evaluate_acq(inst.query, inst.db);
    if (answers != naive_join(inst.query, inst.db)) {
      ++eval_failures;
      continue;
    }
    check_layered(inst, answers);
  }

  std::ostringstream detail;
  detail << kAcqInstances << " random acyclic instances, " << eval_failures
         << " join mismatches, " << leaf_failures << " leaf mismatches; layered engine agreed on "
         << layered_checked - layered_failures << "/" << layered_checked << " eligible instances";
  return {eval_failures == 0 && leaf_failures == 0 && layered_failures == 0, detail.str()};
}

// ------------------------------------------------------------ criterion 7

Outcome criterion_fast_path() {
  std::mt19937_64 rng(9210);
  AcqOptions opts;
  opts.max_atoms = 4;
  opts.max_rows_per_atom = 6;
  opts.min_answers = 2;

  std::size_t mismatches = 0;
  std::uint64_t delta_evals = 0;
  for (std::size_t i = 0; i < kFastPathInstances; ++i) {
    AcqInstance inst = random_layered_acq(rng, opts);
    std::vector<Row> answers = evaluate_acq(inst.query, inst.db);
    std::size_t k = pick(rng, 2, std::min<std::size_t>(5, answers.size()));

    SolverStats fast_stats;
    DiverseResult fast = weitzman_fast_acq(inst.query, inst.db, k, &fast_stats);
    delta_evals += fast_stats.delta_evaluations;

    std::unique_ptr<ImplicitTreeHandle> layered = layered_prefix_tree(inst.query, inst.db);
    DiverseResult greedy = greedy_diverse(*layered, k, kWeitzman);
    if (fast.value != greedy.value || fast.picks != greedy.picks) ++mismatches;
  }

  std::ostringstream detail;
  detail << kFastPathInstances << " trio-free instances, " << mismatches
         << " mismatches vs greedy, " << delta_evals << " diversity re-evaluations in the bucket path";
  return {mismatches == 0 && delta_evals == 0, detail.str()};
}

// ------------------------------------------------------------ criterion 8

Database cross_database(std::size_t n) {
  Database db;
  std::string left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left += "a" + std::to_string(i) + "\n";
    right += "b" + std::to_string(i) + "\n";
  }
  db.add_csv("L", left);
  db.add_csv("R", right);
  db.finalize();
  return db;
}

Outcome criterion_cross_product() {
  Database db = cross_database(1000);  // 10^6 answers
  ConjunctiveQuery q = parse_cq("Q(x, y) :- L(x), R(y).");

  Clock::time_point t0 = Clock::now();
  std::unique_ptr<ImplicitTreeHandle> handle = layered_prefix_tree(q, db);
  DiverseResult result = greedy_diverse(*handle, 5, kWeitzman);
  double elapsed = seconds_since(t0);

  std::uint64_t materialized = handle->stats().members_materialized;
  bool refused = false;
  try {
    evaluate_acq(q, db, 100'000);
  } catch (const CapExceededError&) {
    refused = true;
  }

  bool ok = result.picks.size() == 5 && elapsed < kCrossProductDeadline && materialized <= 100 &&
            refused;
  std::ostringstream detail;
  detail << "5-diverse set over 10^6 answers in " << fmt_seconds(elapsed) << ", " << materialized
         << " answers materialized; explicit pipeline "
         << (refused ? "refused at its 100000-answer cap" : "was not refused");
  return {ok, detail.str()};
}

// ------------------------------------------------------------ criterion 9

Outcome criterion_monotonicity() {
  struct Cell {
    const char* function;
    MonotonicityClass cls;
    const char* family;
    TripleSampler sampler;
  };

  std::vector<Cell> cells;
  for (const char* name : {"sum", "min"}) {
    DiversityFunction f = DiversityFunction::by_name(name);
    cells.push_back({name, MonotonicityClass::Subset, "bounded",
                     bounded_subset_sampler(f, 14, 4, 3)});
    cells.push_back({name, MonotonicityClass::WeakSubset, "bounded",
                     bounded_weak_subset_sampler(f, 14, 4, 3)});
    cells.push_back({name, MonotonicityClass::Weak, "bounded", bounded_weak_sampler(12, 5)});
    cells.push_back({name, MonotonicityClass::Subset, "ultrametric",
                     ultrametric_subset_sampler(14, 3, 3)});
    cells.push_back({name, MonotonicityClass::WeakSubset, "ultrametric",
                     ultrametric_weak_subset_sampler(f, 14, 3, 3)});
    cells.push_back({name, MonotonicityClass::Weak, "ultrametric",
                     ultrametric_weak_sampler(12, 4)});
  }
  cells.push_back({"weitzman", MonotonicityClass::Subset, "ultrametric",
                   ultrametric_subset_sampler(12, 3, 3)});
  cells.push_back({"weitzman", MonotonicityClass::WeakSubset, "ultrametric",
                   ultrametric_weak_subset_sampler(kWeitzman, 12, 3, 3)});
  cells.push_back({"weitzman", MonotonicityClass::Weak, "ultrametric",
                   ultrametric_weak_sampler(12, 4)});
  cells.push_back({"sum-min", MonotonicityClass::WeakSubset, "ultrametric",
                   ultrametric_weak_subset_sampler(kSumMin, 12, 3, 3)});
  cells.push_back({"sum-min", MonotonicityClass::Weak, "ultrametric",
                   ultrametric_weak_sampler(12, 4)});

  std::size_t cell_failures = 0;
  std::uint64_t seed = 9220;
  for (const Cell& cell : cells) {
    std::mt19937_64 rng(seed++);
    MonotonicityReport r = check_monotonicity(DiversityFunction::by_name(cell.function), cell.cls,
                                              cell.sampler, kMonotonicityTrials, rng);
    if (!r.pass || r.trials_run != kMonotonicityTrials) ++cell_failures;
  }

  // The replacement witness must break subset monotonicity with the exact
  // values 12 (candidates) vs 11 (replacements).
  WitnessInstance w = weitzman_drop_instance();
  TripleSampler constant = [&](std::mt19937_64&) {
    MonotonicityTriple t;
    t.base = w.base;
    t.candidate = w.candidate;
    t.replacement = w.replacement;
    t.metric = w.metric.get();
    return t;
  };
  std::mt19937_64 rng(9219);
  MonotonicityReport drop =
      check_monotonicity(kWeitzman, MonotonicityClass::Subset, constant, kMonotonicityTrials, rng);
  bool witness_ok = !drop.pass && drop.trials_run == 1 && drop.with_candidate == Rational(12) &&
                    drop.with_replacement == Rational(11);

  std::ostringstream detail;
  detail << cells.size() << " asserted cells x " << kMonotonicityTrials << " trials, "
         << cell_failures << " failures; replacement witness "
         << (witness_ok ? "reproduced 12 vs 11" : "did not reproduce 12 vs 11");
  return {cell_failures == 0 && witness_ok, detail.str()};
}

// -------------------------------------------------------------- harness

struct Criterion {
  const char* label;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"running-example ball tree via both builders", criterion_cars},
      {"explicit DP equals the brute-force oracle", criterion_explicit_oracle},
      {"implicit solvers equal the brute-force oracle", criterion_implicit_oracle},
      {"independent-set threshold equivalences", criterion_hardness},
      {"ultrametric recursive-diversity identities", criterion_weitzman_identities},
      {"ACQ evaluation and engine agreement", criterion_acq_engines},
      {"bucket fast path matches greedy with no re-evaluation", criterion_fast_path},
      {"cross-product scalability without materialization", criterion_cross_product},
      {"monotonicity table and replacement witness", criterion_monotonicity},
  };

  std::size_t failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].label << " (" << outcome.detail << ")" << std::endl;
  }

  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " of " << criteria.size() << " criteria failed"
            << std::endl;
  return 1;
}
