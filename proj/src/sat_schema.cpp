#include "divkit/sat_schema.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "divkit/errors.hpp"

namespace divkit {

namespace {

struct FormulaParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("formula, offset " + std::to_string(pos) + ": " + what);
  }
};

}  // namespace

BooleanFormula BooleanFormula::parse(std::string_view text) {
  BooleanFormula f;
  f.text_.assign(text);
  FormulaParser p{text};

  auto make = [&f](Node n) {
    f.nodes_.push_back(n);
    return static_cast<std::int32_t>(f.nodes_.size() - 1);
  };

  // or := and ('|' and)*; and := unary ('&' unary)*;
  // unary := '!' unary | '(' or ')' | x<digits>
  auto parse_or = [&](auto&& self_or) -> std::int32_t {
    auto parse_unary = [&](auto&& self_unary) -> std::int32_t {
      p.skip_space();
      if (p.eat('!')) {
        Node n{Node::Kind::Not};
        n.lhs = self_unary(self_unary);
        return make(n);
      }
      if (p.eat('(')) {
        std::int32_t inner = self_or(self_or);
        if (!p.eat(')')) {
          p.fail("expected ')'");
        }
        return inner;
      }
      p.skip_space();
      if (p.pos >= p.text.size() || p.text[p.pos] != 'x') {
        p.fail("expected a variable x<index>, '!' or '('");
      }
      ++p.pos;
      if (p.pos >= p.text.size() || std::isdigit(static_cast<unsigned char>(p.text[p.pos])) == 0) {
        p.fail("expected digits after 'x'");
      }
      unsigned idx = 0;
      while (p.pos < p.text.size() && std::isdigit(static_cast<unsigned char>(p.text[p.pos])) != 0) {
        idx = idx * 10 + static_cast<unsigned>(p.text[p.pos] - '0');
        if (idx > 1000000) {
          p.fail("variable index out of range");
        }
        ++p.pos;
      }
      if (idx == 0) {
        p.fail("variable indices start at 1");
      }
      f.n_ = std::max(f.n_, idx);
      Node n{Node::Kind::Var};
      n.var = idx;
      return make(n);
    };
    auto parse_and = [&]() -> std::int32_t {
      std::int32_t lhs = parse_unary(parse_unary);
      while (p.eat('&')) {
        Node n{Node::Kind::And};
        n.lhs = lhs;
        n.rhs = parse_unary(parse_unary);
        lhs = make(n);
      }
      return lhs;
    };
    std::int32_t lhs = parse_and();
    while (p.eat('|')) {
      Node n{Node::Kind::Or};
      n.lhs = lhs;
      n.rhs = parse_and();
      lhs = make(n);
    }
    return lhs;
  };

  f.root_ = parse_or(parse_or);
  p.skip_space();
  if (p.pos != text.size()) {
    p.fail("trailing input after the formula");
  }
  return f;
}

bool BooleanFormula::eval(std::uint32_t assignment) const {
  // Nodes are created children-first, so evaluating in index order works.
  std::vector<bool> value(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Node::Kind::Var:
        value[i] = (assignment >> (n.var - 1)) & 1u;
        break;
      case Node::Kind::Not:
        value[i] = !value[static_cast<std::size_t>(n.lhs)];
        break;
      case Node::Kind::And:
        value[i] = value[static_cast<std::size_t>(n.lhs)] &&
                   value[static_cast<std::size_t>(n.rhs)];
        break;
      case Node::Kind::Or:
        value[i] = value[static_cast<std::size_t>(n.lhs)] ||
                   value[static_cast<std::size_t>(n.rhs)];
        break;
    }
  }
  return value[static_cast<std::size_t>(root_)];
}

namespace {

// Ball ids: {len, bits} for the set of extended assignments matching the
// first len variables; {n, bits, flag} for one extended assignment.
// Solutions: {bits, flag}.
class SatSchemaHandle : public ImplicitTreeHandle {
 public:
  explicit SatSchemaHandle(BooleanFormula f) : formula_(std::move(f)) {
    if (formula_.variable_count() == 0) {
      throw PreconditionError("the formula mentions no variable");
    }
    if (formula_.variable_count() > kSatSchemaMaxVars) {
      throw PreconditionError("the assignment schema supports at most " +
                              std::to_string(kSatSchemaMaxVars) + " variables");
    }
    n_ = formula_.variable_count();
  }

  BallId root() override { return {0, 0}; }

  std::unique_ptr<ChildCursor> children(const BallId& ball) override {
    check_ball(ball);
    if (ball.size() == 3) {
      throw InternalError("children requested on a single extended assignment");
    }
    const std::uint32_t len = ball[0];
    const std::uint32_t bits = ball[1];
    std::vector<BallId> out;
    if (len < n_) {
      out.push_back({len + 1, bits});                     // next variable false
      out.push_back({len + 1, bits | (1u << len)});      // next variable true
    } else {
      if (!formula_.eval(bits)) {
        throw InternalError("children requested on a non-model bottom ball");
      }
      out.push_back({n_, bits, 0});
      out.push_back({n_, bits, 1});
    }
    return std::make_unique<VectorCursor>(std::move(out), &stats_);
  }

  Solution member(const BallId& ball) override {
    check_ball(ball);
    ++stats_.members_materialized;
    if (ball.size() == 3) {
      return {ball[1], ball[2]};
    }
    // All-false extension of the prefix, plain copy.
    return {ball[1], 0};
  }

  bool singleton(const BallId& ball) override {
    check_ball(ball);
    if (ball.size() == 3) {
      return true;
    }
    if (ball[0] < n_) {
      return false;
    }
    return !formula_.eval(ball[1]);
  }

  Rational distance(const Solution& a, const Solution& b) const override {
    if (a.size() != 2 || b.size() != 2) {
      throw InternalError("malformed extended assignment");
    }
    if (a == b) {
      return Rational{};
    }
    unsigned agree = 0;
    while (agree < n_ && ((a[0] ^ b[0]) & (1u << agree)) == 0) {
      ++agree;
    }
    // Positions run over (x1..xn, flag); i is the agreed prefix length.
    return Rational::inverse_pow(3, agree);
  }

  std::string describe(const Solution& s) const override {
    std::string out;
    for (unsigned i = 0; i < n_; ++i) {
      out += ((s[0] >> i) & 1u) != 0 ? 't' : 'f';
    }
    out += ':';
    out += s[1] != 0 ? '1' : '0';
    return out;
  }

 private:
  void check_ball(const BallId& ball) const {
    const bool two = ball.size() == 2 && ball[0] <= n_;
    const bool three = ball.size() == 3 && ball[0] == n_ && ball[2] <= 1;
    if (!two && !three) {
      throw InternalError("malformed assignment-schema ball id");
    }
    const std::uint32_t len = ball[0];
    const std::uint32_t mask = len >= 32 ? ~0u : ((1u << len) - 1u);
    if ((ball[1] & ~mask) != 0) {
      throw InternalError("assignment bits outside the bound prefix");
    }
  }

  BooleanFormula formula_;
  unsigned n_ = 0;
};

}  // namespace

std::unique_ptr<ImplicitTreeHandle> sat_schema_handle(BooleanFormula formula) {
  return std::make_unique<SatSchemaHandle>(std::move(formula));
}

std::size_t sat_schema_k(const BooleanFormula& formula) {
  return formula.variable_count() + 2;
}

Rational sat_schema_threshold(const BooleanFormula& formula) {
  // 3^-n + sum of 3^-i for i in 0..n, i.e. (3 + 3^-n) / 2.
  const unsigned n = formula.variable_count();
  Rational total = Rational::inverse_pow(3, n);
  for (unsigned i = 0; i <= n; ++i) {
    total = total + Rational::inverse_pow(3, i);
  }
  return total;
}

}  // namespace divkit
