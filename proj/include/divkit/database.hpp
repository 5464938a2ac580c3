#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "divkit/elements.hpp"

namespace divkit {

// Finite set of tuples per relation; values interned to dense ids.
// Tuples are deduplicated (set semantics) and stored in a deterministic
// order once finalize() has run.
class Database {
 public:
  struct Relation {
    std::size_t arity = 0;
    std::vector<std::vector<ValueId>> rows;
  };

  void add_row(const std::string& relation, std::span<const std::string> values);
  // Sorts rows by interned-string order and drops duplicates.
  void finalize();

  // Reads every <RelationName>.csv in the directory (sorted by name):
  // no header, one tuple per line, values trimmed of surrounding
  // whitespace. Rows of one relation must agree on arity.
  static Database load_dir(const std::string& dir);
  // Same format, single relation from explicit text (used by generators).
  void add_csv(const std::string& relation, const std::string& text);

  const Relation* find(const std::string& relation) const;
  const std::map<std::string, Relation>& relations() const { return relations_; }

  const StringPool& pool() const { return pool_; }
  StringPool& pool() { return pool_; }

  // Sorts value ids by their original strings.
  bool value_less(ValueId a, ValueId b) const { return pool_.less(a, b); }
  bool row_less(const std::vector<ValueId>& a, const std::vector<ValueId>& b) const;

 private:
  StringPool pool_;
  std::map<std::string, Relation> relations_;
};

}  // namespace divkit
