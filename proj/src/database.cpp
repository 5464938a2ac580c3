#include "divkit/database.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "divkit/errors.hpp"

namespace divkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void Database::add_row(const std::string& relation, std::span<const std::string> values) {
  auto [it, inserted] = relations_.try_emplace(relation);
  Relation& rel = it->second;
  if (inserted) {
    rel.arity = values.size();
  } else if (rel.arity != values.size()) {
    throw ParseError("relation " + relation + ": row with " + std::to_string(values.size()) +
                     " values in a relation of arity " + std::to_string(rel.arity));
  }
  std::vector<ValueId> row;
  row.reserve(values.size());
  for (const std::string& v : values) {
    row.push_back(pool_.intern(v));
  }
  rel.rows.push_back(std::move(row));
}

bool Database::row_less(const std::vector<ValueId>& a, const std::vector<ValueId>& b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) {
      return pool_.less(a[i], b[i]);
    }
  }
  return a.size() < b.size();
}

void Database::finalize() {
  for (auto& [name, rel] : relations_) {
    std::sort(rel.rows.begin(), rel.rows.end(),
              [this](const auto& a, const auto& b) { return row_less(a, b); });
    rel.rows.erase(std::unique(rel.rows.begin(), rel.rows.end()), rel.rows.end());
  }
}

void Database::add_csv(const std::string& relation, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      continue;
    }
    std::vector<std::string> values;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) {
      values.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
      values.push_back("");
    }
    add_row(relation, values);
  }
}

Database Database::load_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw ParseError("database directory not found: " + dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  Database db;
  for (const fs::path& file : files) {
    std::ifstream in(file);
    if (!in) {
      throw ParseError("cannot read " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    db.add_csv(file.stem().string(), buf.str());
  }
  db.finalize();
  return db;
}

const Database::Relation* Database::find(const std::string& relation) const {
  auto it = relations_.find(relation);
  return it == relations_.end() ? nullptr : &it->second;
}

}  // namespace divkit
