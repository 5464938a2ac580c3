#include "divkit/metric.hpp"

#include <fstream>
#include <sstream>

namespace divkit {

Rational urel_distance(const ElementPayload& a, const ElementPayload& b) {
  if (a.relation != b.relation) return Rational(1, 1);
  std::size_t n = std::min(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.values[i] != b.values[i]) {
      return Rational::inverse_pow(2, static_cast<unsigned>(i + 1));
    }
  }
  if (a.values.size() != b.values.size()) {
    return Rational::inverse_pow(2, static_cast<unsigned>(n + 1));
  }
  return Rational();
}

Rational hamming_distance(const ElementPayload& a, const ElementPayload& b) {
  if (a.values.size() != b.values.size()) {
    throw PreconditionError("hamming distance needs equal arity, got " +
                            std::to_string(a.values.size()) + " and " +
                            std::to_string(b.values.size()));
  }
  std::int64_t count = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] != b.values[i]) ++count;
  }
  return Rational::from_int(count);
}

TableMetric::TableMetric(std::size_t n) : n_(n), cells_(n * n), present_(n * n, false) {}

void TableMetric::set(ElementId a, ElementId b, Rational d) {
  if (a >= n_ || b >= n_) throw InternalError("table metric index out of range");
  cells_[a * n_ + b] = d;
  cells_[b * n_ + a] = d;
  present_[a * n_ + b] = present_[b * n_ + a] = true;
}

Rational TableMetric::distance(ElementId a, ElementId b) const {
  if (a >= n_ || b >= n_) throw InternalError("table metric index out of range");
  if (a == b) return Rational();
  if (!present_[a * n_ + b]) {
    throw Error("table metric has no value for pair (" + std::to_string(a) + "," +
                std::to_string(b) + ")");
  }
  return cells_[a * n_ + b];
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

LoadedTableMetric parse_table_metric_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("table metric: empty input");
  {
    auto header = split_csv_line(line);
    for (auto& h : header) h = trim(h);
    if (header != std::vector<std::string>{"a", "b", "num", "den"}) {
      throw ParseError("table metric: expected header 'a,b,num,den'");
    }
  }

  struct Row {
    std::string a, b;
    Rational d;
  };
  std::vector<Row> rows;
  std::vector<std::string> labels;
  auto label_index = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == l) return i;
    }
    labels.push_back(l);
    return labels.size() - 1;
  };

  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != 4) {
      throw ParseError("table metric line " + std::to_string(lineno) + ": expected 4 fields");
    }
    Row r;
    r.a = trim(cells[0]);
    r.b = trim(cells[1]);
    std::int64_t num, den;
    try {
      num = Rational::parse(trim(cells[2])).num();
      den = Rational::parse(trim(cells[3])).num();
    } catch (const ParseError&) {
      throw ParseError("table metric line " + std::to_string(lineno) + ": bad num/den");
    }
    if (den == 0) {
      throw ParseError("table metric line " + std::to_string(lineno) + ": zero denominator");
    }
    r.d = Rational(num, den);
    label_index(r.a);
    label_index(r.b);
    rows.push_back(std::move(r));
  }

  LoadedTableMetric out{ElementTable(), TableMetric(labels.size())};
  for (const auto& l : labels) out.elements.add_label(l);
  std::unordered_map<std::string, ElementId> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) ids[labels[i]] = static_cast<ElementId>(i);

  for (const auto& r : rows) {
    ElementId a = ids[r.a], b = ids[r.b];
    if (a == b) {
      if (!r.d.is_zero()) throw ParseError("table metric: d(" + r.a + "," + r.a + ") must be 0");
      continue;
    }
    out.metric.set(a, b, r.d);
  }

  // Symmetry is applied by set(); every off-diagonal pair must now be covered.
  std::size_t n = labels.size();
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      try {
        out.metric.distance(a, b);
      } catch (const Error&) {
        throw ParseError("table metric: incomplete table, missing pair (" + labels[a] + "," +
                         labels[b] + ")");
      }
    }
  }
  return out;
}

LoadedTableMetric load_table_metric_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open metric file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_table_metric_csv(ss.str());
}

UltrametricCheck is_ultrametric(std::span<const ElementId> elements, const MetricOracle& d) {
  for (ElementId a : elements) {
    for (ElementId b : elements) {
      if (a == b) continue;
      for (ElementId c : elements) {
        if (c == a || c == b) continue;
        Rational ab = d.distance(a, b), bc = d.distance(b, c), ac = d.distance(a, c);
        Rational cap = ab < bc ? bc : ab;
        if (ac > cap) return {false, std::array<ElementId, 3>{a, b, c}};
      }
    }
  }
  return {};
}

MetricCheck check_metric(std::span<const ElementId> elements, const MetricOracle& d) {
  for (ElementId a : elements) {
    if (!d.distance(a, a).is_zero()) {
      return {false, "d(a,a) != 0 for a=" + std::to_string(a)};
    }
    for (ElementId b : elements) {
      if (a == b) continue;
      if (d.distance(a, b).is_zero()) {
        return {false, "d=0 for distinct pair (" + std::to_string(a) + "," + std::to_string(b) + ")"};
      }
      if (d.distance(a, b) != d.distance(b, a)) {
        return {false, "asymmetric pair (" + std::to_string(a) + "," + std::to_string(b) + ")"};
      }
      for (ElementId c : elements) {
        if (c == a || c == b) continue;
        if (d.distance(a, c) > d.distance(a, b) + d.distance(b, c)) {
          return {false, "triangle violated at (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")"};
        }
      }
    }
  }
  return {};
}

}  // namespace divkit
