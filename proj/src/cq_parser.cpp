#include "divkit/cq.hpp"

#include <cctype>
#include <map>
#include <unordered_map>

#include "divkit/errors.hpp"

namespace divkit {

bool ConjunctiveQuery::head_repeats() const {
  for (std::size_t i = 0; i < head.size(); ++i) {
    for (std::size_t j = i + 1; j < head.size(); ++j) {
      if (head[i] == head[j]) {
        return true;
      }
    }
  }
  return false;
}

void ConjunctiveQuery::index() {
  variables.clear();
  head_var.clear();
  atom_vars.clear();

  std::unordered_map<std::string, std::uint32_t> var_index;
  for (const Atom& atom : atoms) {
    for (const std::string& v : atom.vars) {
      if (var_index.emplace(v, variables.size()).second) {
        variables.push_back(v);
      }
    }
  }
  atom_vars.reserve(atoms.size());
  for (const Atom& atom : atoms) {
    std::vector<std::uint32_t> cols;
    cols.reserve(atom.vars.size());
    for (const std::string& v : atom.vars) {
      cols.push_back(var_index.at(v));
    }
    atom_vars.push_back(std::move(cols));
  }
  head_var.reserve(head.size());
  for (const std::string& v : head) {
    auto it = var_index.find(v);
    if (it == var_index.end()) {
      throw ParseError("head variable " + v + " does not occur in the body");
    }
    head_var.push_back(it->second);
  }

  std::map<std::string, std::size_t> arity;
  for (const Atom& atom : atoms) {
    auto [it, inserted] = arity.try_emplace(atom.relation, atom.vars.size());
    if (!inserted && it->second != atom.vars.size()) {
      throw ParseError("relation " + atom.relation + " used with arities " +
                       std::to_string(it->second) + " and " + std::to_string(atom.vars.size()));
    }
  }
}

namespace {

struct CqScanner {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("query, line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + what);
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
      ++pos;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c, const char* what) {
    if (!peek(c)) {
      fail(std::string("expected ") + what);
    }
    ++pos;
  }

  std::string identifier(const char* what) {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) != 0 || text[pos] == '_')) {
      ++pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) != 0 ||
                                   text[pos] == '_')) {
        ++pos;
      }
      return std::string(text.substr(start, pos - start));
    }
    fail(std::string("expected ") + what);
  }

  // name(v1,..,vn); empty parentheses allowed only when allow_empty.
  void var_list(std::vector<std::string>& out, bool allow_empty) {
    expect('(', "'('");
    if (peek(')')) {
      if (!allow_empty) {
        fail("expected a variable");
      }
      ++pos;
      return;
    }
    out.push_back(identifier("a variable"));
    while (peek(',')) {
      ++pos;
      out.push_back(identifier("a variable"));
    }
    expect(')', "')' or ','");
  }
};

}  // namespace

ConjunctiveQuery parse_cq(std::string_view text) {
  CqScanner s{text};
  ConjunctiveQuery q;

  q.head_relation = s.identifier("the head relation name");
  s.var_list(q.head, /*allow_empty=*/true);
  s.skip_space();
  if (s.pos + 1 >= s.text.size() || s.text[s.pos] != ':' || s.text[s.pos + 1] != '-') {
    s.fail("expected ':-'");
  }
  s.pos += 2;

  if (s.peek('.')) {
    s.fail("the body must contain at least one atom");
  }
  while (true) {
    Atom atom;
    atom.relation = s.identifier("an atom relation name");
    s.var_list(atom.vars, /*allow_empty=*/false);
    q.atoms.push_back(std::move(atom));
    if (s.peek(',')) {
      ++s.pos;
      continue;
    }
    break;
  }
  s.expect('.', "'.' after the last atom");
  s.skip_space();
  if (s.pos != text.size()) {
    s.fail("trailing input after the rule");
  }

  q.index();
  return q;
}

}  // namespace divkit
