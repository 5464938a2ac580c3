#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace divkit {

struct Atom {
  std::string relation;
  std::vector<std::string> vars;
};

// Conjunctive query Q(head) :- atom, .., atom. Head order is significant:
// it fixes tuple positions and therefore the u_rel distances between
// answers.
struct ConjunctiveQuery {
  std::string head_relation;
  std::vector<std::string> head;  // positional head variables (repeats allowed)
  std::vector<Atom> atoms;

  // Derived tables, filled by parse_cq / index().
  std::vector<std::string> variables;                 // distinct body vars, first occurrence
  std::vector<std::uint32_t> head_var;                // head position -> variable index
  std::vector<std::vector<std::uint32_t>> atom_vars;  // atom -> variable index per column

  std::size_t var_count() const { return variables.size(); }
  bool head_repeats() const;
  // Rebuilds the derived tables; throws ParseError on an unbound head
  // variable or a relation used with two arities.
  void index();
};

// Syntax: Q(x1,x2) :- R(x1,y), S(y,x2).
// Identifiers are [A-Za-z_][A-Za-z0-9_]*; the trailing period is required;
// the body must be non-empty. Errors carry line:column positions.
ConjunctiveQuery parse_cq(std::string_view text);

}  // namespace divkit
