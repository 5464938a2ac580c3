#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "divkit/acq_handles.hpp"
#include "divkit/cq.hpp"
#include "divkit/database.hpp"
#include "divkit/diversity.hpp"
#include "divkit/errors.hpp"
#include "divkit/explicit_solver.hpp"
#include "divkit/hardness.hpp"
#include "divkit/implicit_solver.hpp"
#include "divkit/join_tree.hpp"
#include "divkit/metric.hpp"
#include "divkit/sat_schema.hpp"
#include "divkit/ultrametric_tree.hpp"
#include "divkit/yannakakis.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace divkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ConjunctiveQuery load_query(const std::string& path) { return parse_cq(read_file(path)); }

std::size_t env_oracle_cap() {
  const char* raw = std::getenv("DIVKIT_ORACLE_CAP");
  if (raw == nullptr) {
    return kDefaultOracleCap;
  }
  std::string s(raw);
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw Error("DIVKIT_ORACLE_CAP must be a positive integer, got '" + s + "'");
  }
  if (pos != s.size() || v == 0) {
    throw Error("DIVKIT_ORACLE_CAP must be a positive integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

ojson rational_json(const Rational& r) {
  return ojson{{"num", r.num()}, {"den", r.den()}};
}

std::vector<std::string> row_strings(const StringPool& pool, const std::vector<ValueId>& row) {
  std::vector<std::string> out;
  out.reserve(row.size());
  for (ValueId v : row) {
    out.push_back(pool.str(v));
  }
  return out;
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) {
      line += ',';
    }
    line += fields[i];
  }
  return line;
}

// Everything one diverse run reports; counters differ by pipeline, the
// report only carries the ones that were actually maintained.
struct DiverseOutcome {
  std::vector<std::vector<std::string>> answers;  // pick order
  Rational value;
  std::string mode;
  std::string engine;  // implicit pipelines only
  bool fast_path = false;
  SolverStats stats;
  HandleStats handle_stats;
  bool has_handle_stats = false;
  std::size_t answers_materialized = 0;  // explicit pipeline only
  bool is_explicit = false;
};

struct DiverseRequest {
  std::size_t k = 0;
  DiversityFunction delta;
  std::string mode;    // auto | implicit-greedy | implicit-fpt | explicit
  std::string engine;  // "" | basic | layered
  std::size_t max_answers = 0;
};

DiverseOutcome run_explicit_pipeline(const ConjunctiveQuery& q, const Database& db,
                                     const DiverseRequest& req) {
  std::vector<Row> answers = evaluate_acq(q, db, req.max_answers);
  if (answers.empty()) {
    throw PreconditionError("the query has no answers over this database");
  }
  std::vector<ElementId> ids(answers.size());
  std::iota(ids.begin(), ids.end(), 0u);
  FnMetric metric([&answers](ElementId a, ElementId b) {
    return answer_urel_distance(answers[a], answers[b]);
  });
  ExplicitSolveResult res = solve_explicit_dp(ids, metric, req.k, req.delta);

  DiverseOutcome out;
  out.mode = "explicit";
  out.is_explicit = true;
  out.answers_materialized = answers.size();
  out.value = res.value;
  for (ElementId id : res.subset) {
    out.answers.push_back(row_strings(db.pool(), answers[id]));
  }
  return out;
}

DiverseOutcome run_implicit_pipeline(const ConjunctiveQuery& q, const Database& db,
                                     const DiverseRequest& req, const std::string& mode,
                                     const std::string& engine) {
  DiverseOutcome out;
  out.mode = mode;
  out.engine = engine;
  out.has_handle_stats = true;

  if (mode == "implicit-greedy" && engine == "layered" &&
      req.delta.kind == DiversityKind::Weitzman) {
    // Bucket fast path; pick order and value equal the generic greedy.
    out.fast_path = true;
    DiverseResult res = weitzman_fast_acq(q, db, req.k, &out.stats, &out.handle_stats);
    out.value = res.value;
    for (const Solution& s : res.picks) {
      out.answers.push_back(row_strings(db.pool(), s));
    }
    return out;
  }

  std::unique_ptr<ImplicitTreeHandle> handle =
      engine == "layered" ? layered_prefix_tree(q, db) : acq_prefix_tree(q, db);
  DiverseResult res = mode == "implicit-fpt" ? fpt_diverse(*handle, req.k, req.delta, &out.stats)
                                             : greedy_diverse(*handle, req.k, req.delta, &out.stats);
  out.value = res.value;
  for (const Solution& s : res.picks) {
    out.answers.push_back(row_strings(db.pool(), s));
  }
  out.handle_stats = handle->stats();
  return out;
}

DiverseOutcome run_diverse_query(const ConjunctiveQuery& q, const Database& db,
                                 const DiverseRequest& req) {
  auto auto_solver = [&]() -> std::string {
    return req.delta.subset_monotone(true) ? "implicit-greedy" : "implicit-fpt";
  };

  if (req.mode == "explicit") {
    if (!req.engine.empty()) {
      throw Error("--engine applies to the implicit pipelines");
    }
    return run_explicit_pipeline(q, db, req);
  }

  if (req.mode == "implicit-greedy" || req.mode == "implicit-fpt") {
    std::string engine = req.engine;
    if (engine.empty()) {
      engine = layered_eligibility(q).eligible ? "layered" : "basic";
    }
    return run_implicit_pipeline(q, db, req, req.mode, engine);
  }

  // auto: layered when its preconditions hold, else basic implicit, else
  // the explicit pipeline.
  if (!req.engine.empty()) {
    return run_implicit_pipeline(q, db, req, auto_solver(), req.engine);
  }
  if (layered_eligibility(q).eligible) {
    return run_implicit_pipeline(q, db, req, auto_solver(), "layered");
  }
  try {
    return run_implicit_pipeline(q, db, req, auto_solver(), "basic");
  } catch (const PreconditionError&) {
    return run_explicit_pipeline(q, db, req);
  }
}

DiverseOutcome run_diverse_formula(const BooleanFormula& formula, const DiverseRequest& req) {
  if (req.mode == "explicit") {
    throw Error("the formula backend is implicit only; use --mode auto, implicit-greedy, or implicit-fpt");
  }
  if (!req.engine.empty()) {
    throw Error("--engine applies to database-backed queries");
  }
  std::string mode = req.mode;
  if (mode == "auto") {
    mode = req.delta.subset_monotone(true) ? "implicit-greedy" : "implicit-fpt";
  }

  DiverseOutcome out;
  out.mode = mode;
  out.engine = "sat-schema";
  out.has_handle_stats = true;

  std::unique_ptr<ImplicitTreeHandle> handle = sat_schema_handle(formula);
  DiverseResult res = mode == "implicit-fpt" ? fpt_diverse(*handle, req.k, req.delta, &out.stats)
                                             : greedy_diverse(*handle, req.k, req.delta, &out.stats);
  out.value = res.value;
  for (const Solution& s : res.picks) {
    out.answers.push_back({handle->describe(s)});
  }
  out.handle_stats = handle->stats();
  return out;
}

void emit_diverse(const DiverseOutcome& out, const DiverseRequest& req, const std::string& format,
                  bool decimal, std::optional<double> wall_ms, const ojson& extra) {
  if (format == "json") {
    ojson j;
    j["answers"] = out.answers;
    j["value"] = rational_json(out.value);
    if (decimal) {
      j["value_decimal"] = out.value.to_double();
    }
    j["diversity"] = std::string(req.delta.name());
    j["k"] = req.k;
    j["mode"] = out.mode;
    if (!out.engine.empty()) {
      j["engine"] = out.engine;
    }
    if (out.fast_path) {
      j["fast_path"] = true;
    }
    ojson counters;
    if (out.is_explicit) {
      counters["answers_materialized"] = out.answers_materialized;
    } else {
      counters["balls_expanded"] = out.stats.balls_expanded;
      counters["delta_evaluations"] = out.stats.delta_evaluations;
      counters["incremental_updates"] = out.stats.incremental_updates;
      counters["max_frontier"] = out.stats.max_frontier;
      if (out.mode == "implicit-fpt") {
        counters["relevant_elements"] = out.stats.relevant_elements;
      }
      if (out.has_handle_stats) {
        counters["cursor_steps"] = out.handle_stats.cursor_steps;
        counters["members_materialized"] = out.handle_stats.members_materialized;
      }
    }
    j["counters"] = std::move(counters);
    for (const auto& [key, value] : extra.items()) {
      j[key] = value;
    }
    if (wall_ms) {
      j["wall_ms"] = *wall_ms;
    }
    std::cout << j.dump(2) << "\n";
    return;
  }

  for (const auto& row : out.answers) {
    std::cout << join_csv(row) << "\n";
  }
  std::cerr << "value: " << out.value.format();
  if (decimal) {
    std::cerr << " (" << out.value.to_double() << ")";
  }
  std::cerr << "\n";
  std::cerr << "mode: " << out.mode << "\n";
  if (!out.engine.empty()) {
    std::cerr << "engine: " << out.engine << "\n";
  }
  if (wall_ms) {
    std::cerr << "wall_ms: " << *wall_ms << "\n";
  }
}

// Splits one CSV line into trimmed fields; the line itself is already
// known to be non-blank.
std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  auto push = [&]() {
    std::size_t b = field.find_first_not_of(" \t\r");
    std::size_t e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
    field.clear();
  };
  for (char c : line) {
    if (c == ',') {
      push();
    } else {
      field += c;
    }
  }
  push();
  return fields;
}

ElementTable load_tuple_table(const std::string& path) {
  std::string text = read_file(path);
  ElementTable table;
  std::size_t arity = 0;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::vector<std::string> fields = split_fields(line);
    if (arity == 0) {
      arity = fields.size();
    } else if (fields.size() != arity) {
      throw ParseError(path + ", line " + std::to_string(line_no) + ": expected " +
                       std::to_string(arity) + " fields, got " + std::to_string(fields.size()));
    }
    table.add_tuple("T", fields);
  }
  if (table.size() == 0) {
    throw ParseError(path + ": no tuples");
  }
  return table;
}

std::vector<ElementId> all_ids(std::size_t n) {
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  return ids;
}

std::string label_of(const ElementTable& table, ElementId id) {
  return table.pool().str(table.payload(id).values.at(0));
}

std::vector<ElementId> resolve_labels(const ElementTable& table, const std::string& spec) {
  std::vector<ElementId> ids;
  for (const std::string& label : split_fields(spec)) {
    bool found = false;
    for (ElementId id = 0; id < table.size(); ++id) {
      if (label_of(table, id) == label) {
        ids.push_back(id);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error("unknown element label '" + label + "'");
    }
  }
  if (ids.empty()) {
    throw Error("--elements lists no labels");
  }
  return ids;
}

Rational eval_diversity(std::span<const ElementId> ids, const MetricOracle& metric,
                        const DiversityFunction& delta, std::size_t weitzman_cap) {
  if (delta.kind != DiversityKind::Weitzman) {
    return delta.evaluate(ids, metric);
  }
  if (ids.size() <= weitzman_cap) {
    return delta_weitzman_exact(ids, metric, weitzman_cap);
  }
  UltrametricCheck chk = is_ultrametric(ids, metric);
  if (!chk.ok) {
    throw CapExceededError("weitzman evaluation of " + std::to_string(ids.size()) +
                           " elements exceeds the exact cap of " + std::to_string(weitzman_cap) +
                           " and the metric is not an ultrametric");
  }
  return delta_weitzman_ultrametric(build_ultrametric_tree(ids, metric));
}

void require_ultrametric(std::span<const ElementId> ids, const MetricOracle& metric,
                         const ElementTable& table) {
  UltrametricCheck chk = is_ultrametric(ids, metric);
  if (!chk.ok) {
    const auto& w = *chk.witness;
    throw PreconditionError("the metric is not an ultrametric: d(" + table.describe(w[0]) + ", " +
                            table.describe(w[2]) + ") exceeds the maximum over " +
                            table.describe(w[1]));
  }
}

int run_diverse_cmd(const std::string& db_dir, const std::string& query_file,
                    const std::string& formula_file, const DiverseRequest& req,
                    const std::string& format, bool decimal, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  DiverseOutcome out;
  ojson extra = ojson::object();
  if (!formula_file.empty()) {
    BooleanFormula formula = BooleanFormula::parse(read_file(formula_file));
    out = run_diverse_formula(formula, req);
    extra["formula"] = ojson{{"variables", formula.variable_count()},
                             {"criterion_k", sat_schema_k(formula)},
                             {"criterion_threshold", rational_json(sat_schema_threshold(formula))}};
  } else {
    Database db = Database::load_dir(db_dir);
    ConjunctiveQuery q = load_query(query_file);
    out = run_diverse_query(q, db, req);
  }
  std::optional<double> wall_ms;
  if (timing) {
    wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  emit_diverse(out, req, format, decimal, wall_ms, extra);
  return 0;
}

int run_eval_cmd(const std::string& table_file, const std::string& tuples_file,
                 const std::string& tuple_metric, const std::string& diversity,
                 const std::string& elements_spec, std::size_t weitzman_cap,
                 const std::string& format, bool decimal) {
  DiversityFunction delta = DiversityFunction::by_name(diversity);
  Rational value;
  std::size_t n = 0;

  if (!table_file.empty()) {
    LoadedTableMetric loaded = load_table_metric_csv(table_file);
    std::vector<ElementId> ids = elements_spec.empty()
                                     ? all_ids(loaded.elements.size())
                                     : resolve_labels(loaded.elements, elements_spec);
    n = ids.size();
    value = eval_diversity(ids, loaded.metric, delta, weitzman_cap);
  } else {
    if (!elements_spec.empty()) {
      throw Error("--elements applies to table metrics");
    }
    ElementTable table = load_tuple_table(tuples_file);
    std::vector<ElementId> ids = all_ids(table.size());
    n = ids.size();
    if (tuple_metric == "urel") {
      UrelMetric metric(table);
      value = eval_diversity(ids, metric, delta, weitzman_cap);
    } else {
      HammingMetric metric(table);
      value = eval_diversity(ids, metric, delta, weitzman_cap);
    }
  }

  if (format == "json") {
    ojson j;
    j["diversity"] = std::string(delta.name());
    j["n"] = n;
    j["value"] = rational_json(value);
    if (decimal) {
      j["value_decimal"] = value.to_double();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value.format();
    if (decimal) {
      std::cout << "," << value.to_double();
    }
    std::cout << "\n";
  }
  return 0;
}

int run_tree_dump_cmd(const std::string& table_file, const std::string& db_dir,
                      const std::string& query_file, std::size_t max_answers) {
  if (!table_file.empty()) {
    LoadedTableMetric loaded = load_table_metric_csv(table_file);
    std::vector<ElementId> ids = all_ids(loaded.elements.size());
    require_ultrametric(ids, loaded.metric, loaded.elements);
    std::cout << serialize_tree(build_ultrametric_tree(ids, loaded.metric));
    return 0;
  }
  Database db = Database::load_dir(db_dir);
  ConjunctiveQuery q = load_query(query_file);
  std::vector<Row> answers = evaluate_acq(q, db, max_answers);
  if (answers.empty()) {
    throw PreconditionError("the query has no answers over this database");
  }
  FnMetric metric([&answers](ElementId a, ElementId b) {
    return answer_urel_distance(answers[a], answers[b]);
  });
  std::cout << serialize_tree(build_ultrametric_tree(all_ids(answers.size()), metric));
  return 0;
}

int run_check_acyclic_cmd(const std::string& query_file) {
  ConjunctiveQuery q = load_query(query_file);
  auto result = build_join_tree(q);
  if (std::holds_alternative<JoinTree>(result)) {
    std::cout << "acyclic: yes\n";
  } else {
    const auto& residue = std::get<NotAcyclic>(result).residue;
    std::string atoms;
    for (std::size_t i = 0; i < residue.size(); ++i) {
      if (i > 0) {
        atoms += ", ";
      }
      atoms += q.atoms[static_cast<std::size_t>(residue[i])].relation + "[" +
               std::to_string(residue[i]) + "]";
    }
    std::cout << "acyclic: no (irreducible: " << atoms << ")\n";
  }
  return 0;
}

std::string trio_string(const ConjunctiveQuery& q) {
  auto trio = find_disruptive_trio(q);
  if (!trio) {
    return "none";
  }
  return "(" + std::to_string((*trio)[0]) + "," + std::to_string((*trio)[1]) + "," +
         std::to_string((*trio)[2]) + ")";
}

int run_check_free_connex_cmd(const std::string& query_file) {
  ConjunctiveQuery q = load_query(query_file);
  std::cout << "free-connex: " << (is_free_connex(q) ? "yes" : "no")
            << "; disruptive trio: " << trio_string(q) << "\n";
  return 0;
}

int run_find_trio_cmd(const std::string& query_file) {
  ConjunctiveQuery q = load_query(query_file);
  std::cout << "disruptive trio: " << trio_string(q) << "\n";
  return 0;
}

int run_gen_hardness_cmd(const std::string& kind, const std::string& graph_file, std::size_t k) {
  Graph g = Graph::load(graph_file);
  if (kind == "metric") {
    MetricHardnessInstance inst = is_to_metric_instance(g, k);
    std::cout << "a,b,num,den\n";
    for (ElementId a = 0; a < inst.elements.size(); ++a) {
      for (ElementId b = a + 1; b < inst.elements.size(); ++b) {
        Rational d = inst.metric.distance(a, b);
        std::cout << label_of(inst.elements, a) << "," << label_of(inst.elements, b) << ","
                  << d.num() << "," << d.den() << "\n";
      }
    }
    std::cerr << "k: " << inst.k << "\n";
    std::cerr << "threshold: " << inst.threshold.format() << "\n";
  } else {
    TupleHardnessInstance inst = is_to_tuple_instance(g, k);
    for (ElementId id = 0; id < inst.elements.size(); ++id) {
      std::cout << join_csv(row_strings(inst.elements.pool(), inst.elements.payload(id).values))
                << "\n";
    }
    std::cerr << "k: " << inst.k << "\n";
    std::cerr << "threshold: " << inst.threshold.format() << "\n";
  }
  return 0;
}

int run_oracle_compare_cmd(const std::string& db_dir, const std::string& query_file,
                           const std::string& table_file, const DiverseRequest& req) {
  Rational solver_value;
  Rational oracle_value;
  std::string solver_name;

  if (!table_file.empty()) {
    LoadedTableMetric loaded = load_table_metric_csv(table_file);
    std::vector<ElementId> ids = all_ids(loaded.elements.size());
    require_ultrametric(ids, loaded.metric, loaded.elements);
    solver_value = solve_explicit_dp(ids, loaded.metric, req.k, req.delta).value;
    oracle_value = brute_force_oracle(ids, loaded.metric, req.k, req.delta, env_oracle_cap()).value;
    solver_name = "explicit";
  } else {
    Database db = Database::load_dir(db_dir);
    ConjunctiveQuery q = load_query(query_file);
    DiverseOutcome out = run_diverse_query(q, db, req);
    solver_value = out.value;
    solver_name = out.mode + (out.engine.empty() ? "" : "/" + out.engine);

    std::vector<Row> answers = evaluate_acq(q, db, req.max_answers);
    FnMetric metric([&answers](ElementId a, ElementId b) {
      return answer_urel_distance(answers[a], answers[b]);
    });
    oracle_value =
        brute_force_oracle(all_ids(answers.size()), metric, req.k, req.delta, env_oracle_cap())
            .value;
  }

  std::cout << "solver (" << solver_name << "): " << solver_value.format() << "\n";
  std::cout << "oracle: " << oracle_value.format() << "\n";
  bool match = solver_value == oracle_value;
  std::cout << "match: " << (match ? "yes" : "no") << "\n";
  if (!match) {
    throw InternalError("solver value " + solver_value.format() +
                        " does not equal the oracle value " + oracle_value.format());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-diverse subsets of finite sets and of acyclic conjunctive query answers"};
  app.require_subcommand(1);

  // diverse
  std::string dv_db, dv_query, dv_formula, dv_diversity, dv_mode = "auto", dv_engine;
  std::string dv_out = "json";
  std::size_t dv_k = 0, dv_max_answers = 100'000;
  bool dv_timing = false, dv_decimal = false;
  std::uint64_t dv_seed = 0;
  CLI::App* diverse = app.add_subcommand(
      "diverse", "Compute a k-diverse subset of a query answer set or a formula assignment set");
  diverse->add_option("--db", dv_db, "Directory of <Relation>.csv files")
      ->check(CLI::ExistingDirectory);
  diverse->add_option("--query", dv_query, "Conjunctive query file")->check(CLI::ExistingFile);
  diverse->add_option("--formula", dv_formula,
                      "Boolean formula file (assignment-set backend, implicit modes only)")
      ->check(CLI::ExistingFile);
  diverse->add_option("-k", dv_k, "Subset size, at least 2")->required();
  diverse->add_option("--diversity", dv_diversity, "sum | min | weitzman | sum-min")->required();
  diverse->add_option("--mode", dv_mode, "auto | implicit-greedy | implicit-fpt | explicit")
      ->check(CLI::IsMember({"auto", "implicit-greedy", "implicit-fpt", "explicit"}));
  diverse->add_option("--engine", dv_engine, "Implicit tree engine: basic | layered")
      ->check(CLI::IsMember({"basic", "layered"}));
  diverse->add_option("--out", dv_out, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  diverse->add_option("--max-answers", dv_max_answers,
                      "Materialization cap for the explicit pipeline");
  diverse->add_flag("--timing", dv_timing, "Include wall time in the report");
  diverse->add_flag("--decimal", dv_decimal, "Also render the value as a decimal");
  diverse->add_option("--seed", dv_seed,
                      "Reserved for sampling subcommands; the solvers are deterministic");

  // eval
  std::string ev_table, ev_tuples, ev_tuple_metric = "urel", ev_diversity, ev_elements;
  std::string ev_out = "json";
  std::size_t ev_weitzman_cap = kWeitzmanExactCap;
  bool ev_decimal = false;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a diversity function over an element set");
  eval->add_option("--table", ev_table, "Pairwise metric CSV (header a,b,num,den)")
      ->check(CLI::ExistingFile);
  eval->add_option("--tuples", ev_tuples, "Tuple CSV, one tuple per line")
      ->check(CLI::ExistingFile);
  eval->add_option("--tuple-metric", ev_tuple_metric, "Metric over tuples: urel | hamming")
      ->check(CLI::IsMember({"urel", "hamming"}));
  eval->add_option("--diversity", ev_diversity, "sum | min | weitzman | sum-min")->required();
  eval->add_option("--elements", ev_elements, "Comma-separated labels (table metrics only)");
  eval->add_option("--weitzman-cap", ev_weitzman_cap,
                   "Exact-evaluation cap before the ultrametric closed form is required");
  eval->add_option("--out", ev_out, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  eval->add_flag("--decimal", ev_decimal, "Also render the value as a decimal");

  // tree-dump
  std::string td_table, td_db, td_query;
  std::size_t td_max_answers = 100'000;
  CLI::App* tree_dump =
      app.add_subcommand("tree-dump", "Serialize the ultrametric ball tree of an element set");
  tree_dump->add_option("--table", td_table, "Pairwise metric CSV")->check(CLI::ExistingFile);
  tree_dump->add_option("--db", td_db, "Directory of <Relation>.csv files")
      ->check(CLI::ExistingDirectory);
  tree_dump->add_option("--query", td_query, "Conjunctive query file")->check(CLI::ExistingFile);
  tree_dump->add_option("--max-answers", td_max_answers, "Materialization cap");

  // structure checks
  std::string ca_query, cf_query, ft_query;
  CLI::App* check_acyclic = app.add_subcommand("check-acyclic", "Report whether a query is acyclic");
  check_acyclic->add_option("query", ca_query, "Conjunctive query file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* check_fc = app.add_subcommand(
      "check-free-connex", "Report free-connexness and the first disruptive trio");
  check_fc->add_option("query", cf_query, "Conjunctive query file")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* find_trio = app.add_subcommand("find-trio", "Report the first disruptive trio");
  find_trio->add_option("query", ft_query, "Conjunctive query file")
      ->required()
      ->check(CLI::ExistingFile);

  // gen-hardness
  std::string gh_kind, gh_graph;
  std::size_t gh_k = 0;
  CLI::App* gen_hardness = app.add_subcommand(
      "gen-hardness", "Rewrite an independent-set instance as a diversity threshold instance");
  gen_hardness->add_option("--kind", gh_kind, "metric | tuple")
      ->required()
      ->check(CLI::IsMember({"metric", "tuple"}));
  gen_hardness->add_option("--graph", gh_graph, "Graph file: first line n, then 'u v' edges")
      ->required()
      ->check(CLI::ExistingFile);
  gen_hardness->add_option("-k", gh_k, "Independent set size")->required();

  // oracle-compare
  std::string oc_db, oc_query, oc_table, oc_diversity, oc_mode = "auto", oc_engine;
  std::size_t oc_k = 0, oc_max_answers = 100'000;
  CLI::App* oracle_compare = app.add_subcommand(
      "oracle-compare", "Run a solver and the brute-force oracle and compare values");
  oracle_compare->add_option("--db", oc_db, "Directory of <Relation>.csv files")
      ->check(CLI::ExistingDirectory);
  oracle_compare->add_option("--query", oc_query, "Conjunctive query file")
      ->check(CLI::ExistingFile);
  oracle_compare->add_option("--table", oc_table, "Pairwise metric CSV (explicit route)")
      ->check(CLI::ExistingFile);
  oracle_compare->add_option("-k", oc_k, "Subset size, at least 2")->required();
  oracle_compare->add_option("--diversity", oc_diversity, "sum | min | weitzman | sum-min")
      ->required();
  oracle_compare->add_option("--mode", oc_mode, "auto | implicit-greedy | implicit-fpt | explicit")
      ->check(CLI::IsMember({"auto", "implicit-greedy", "implicit-fpt", "explicit"}));
  oracle_compare->add_option("--engine", oc_engine, "basic | layered")
      ->check(CLI::IsMember({"basic", "layered"}));
  oracle_compare->add_option("--max-answers", oc_max_answers, "Materialization cap for the oracle");

  try {
    app.parse(argc, argv);

    if (diverse->parsed()) {
      bool has_query_source = !dv_db.empty() && !dv_query.empty();
      bool has_formula = !dv_formula.empty();
      if (has_query_source == has_formula) {
        throw Error("diverse needs either --db with --query, or --formula");
      }
      if (dv_k < 2) {
        throw Error("k must be at least 2");
      }
      if (dv_max_answers == 0) {
        throw Error("--max-answers must be positive");
      }
      DiverseRequest req{dv_k, DiversityFunction::by_name(dv_diversity), dv_mode, dv_engine,
                         dv_max_answers};
      return run_diverse_cmd(dv_db, dv_query, dv_formula, req, dv_out, dv_decimal, dv_timing);
    }
    if (eval->parsed()) {
      if (ev_table.empty() == ev_tuples.empty()) {
        throw Error("eval needs exactly one of --table or --tuples");
      }
      if (ev_weitzman_cap == 0) {
        throw Error("--weitzman-cap must be positive");
      }
      return run_eval_cmd(ev_table, ev_tuples, ev_tuple_metric, ev_diversity, ev_elements,
                          ev_weitzman_cap, ev_out, ev_decimal);
    }
    if (tree_dump->parsed()) {
      bool has_query_source = !td_db.empty() && !td_query.empty();
      if (td_table.empty() == !has_query_source) {
        throw Error("tree-dump needs either --table, or --db with --query");
      }
      if (td_max_answers == 0) {
        throw Error("--max-answers must be positive");
      }
      return run_tree_dump_cmd(td_table, td_db, td_query, td_max_answers);
    }
    if (check_acyclic->parsed()) {
      return run_check_acyclic_cmd(ca_query);
    }
    if (check_fc->parsed()) {
      return run_check_free_connex_cmd(cf_query);
    }
    if (find_trio->parsed()) {
      return run_find_trio_cmd(ft_query);
    }
    if (gen_hardness->parsed()) {
      return run_gen_hardness_cmd(gh_kind, gh_graph, gh_k);
    }
    if (oracle_compare->parsed()) {
      bool has_query_source = !oc_db.empty() && !oc_query.empty();
      if (oc_table.empty() == !has_query_source) {
        throw Error("oracle-compare needs either --table, or --db with --query");
      }
      if (oc_k < 2) {
        throw Error("k must be at least 2");
      }
      if (oc_max_answers == 0) {
        throw Error("--max-answers must be positive");
      }
      DiverseRequest req{oc_k, DiversityFunction::by_name(oc_diversity), oc_mode, oc_engine,
                         oc_max_answers};
      return run_oracle_compare_cmd(oc_db, oc_query, oc_table, req);
    }
    throw Error("no subcommand selected");
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
