#include "padic/expr.hpp"

#include <cctype>

namespace padic {

bool expr_equal(const ObjectExpr& a, const ObjectExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ObjectExpr::Kind::Gen:
      return a.gen == b.gen && a.index == b.index;
    case ObjectExpr::Kind::Sum:
    case ObjectExpr::Kind::Tensor:
      return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    case ObjectExpr::Kind::Shift:
    case ObjectExpr::Kind::Res:
      return a.amount == b.amount && expr_equal(*a.lhs, *b.lhs);
    case ObjectExpr::Kind::InflFin:
      return a.finite == b.finite;  // identity; literals are not parsed
  }
  return false;
}

ExprPtr make_gen(GenKind g, int index) {
  auto e = std::make_shared<ObjectExpr>();
  e->kind = ObjectExpr::Kind::Gen;
  e->gen = g;
  e->index = index;
  return e;
}

ExprPtr make_sum(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<ObjectExpr>();
  e->kind = ObjectExpr::Kind::Sum;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr make_tensor(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<ObjectExpr>();
  e->kind = ObjectExpr::Kind::Tensor;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr make_shift(ExprPtr operand, int d) {
  auto e = std::make_shared<ObjectExpr>();
  e->kind = ObjectExpr::Kind::Shift;
  e->lhs = std::move(operand);
  e->amount = d;
  return e;
}

ExprPtr make_res(ExprPtr operand, int n) {
  if (n < 0) throw std::invalid_argument("res: negative level");
  auto e = std::make_shared<ObjectExpr>();
  e->kind = ObjectExpr::Kind::Res;
  e->lhs = std::move(operand);
  e->amount = n;
  return e;
}

ExprPtr make_inflfin(FiniteLevelObject finite) {
  validate(finite);
  auto e = std::make_shared<ObjectExpr>();
  e->kind = ObjectExpr::Kind::InflFin;
  e->finite = std::make_shared<const FiniteLevelObject>(std::move(finite));
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& input) : s_(input) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  // Accepts ASCII '-' and the UTF-8 minus sign.
  bool eat_minus() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (pos_ < s_.size() && s_.compare(pos_, 3, "\xe2\x88\x92") == 0) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  int natural() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a natural number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("index out of range");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  int integer() {
    bool neg = eat_minus();
    int v = natural();
    return neg ? -v : v;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (eat('+')) e = make_sum(std::move(e), term());
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (eat('*')) e = make_tensor(std::move(e), factor());
    return e;
  }

  ExprPtr factor() {
    ExprPtr e = primary();
    while (eat('[')) {
      int d = integer();
      expect(']');
      e = make_shift(std::move(e), d);
    }
    return e;
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (s_.compare(pos_, 3, "res") == 0) {
      pos_ += 3;
      expect('(');
      ExprPtr e = expr();
      expect(',');
      int n = natural();
      expect(')');
      return make_res(std::move(e), n);
    }
    char c = s_[pos_];
    if (c == 'U') {
      ++pos_;
      return make_gen(GenKind::A, 0);
    }
    if (c == 'A' || c == 'E' || c == 'L') {
      ++pos_;
      GenKind g = c == 'A' ? GenKind::A : (c == 'E' ? GenKind::E : GenKind::L);
      expect('(');
      if (eat_minus()) fail("negative generator index");
      int n = natural();
      expect(')');
      return make_gen(g, n);
    }
    fail("expected a generator, 'res' or '('");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

int precedence(const ObjectExpr& e) {
  switch (e.kind) {
    case ObjectExpr::Kind::Sum:
      return 0;
    case ObjectExpr::Kind::Tensor:
      return 1;
    default:
      return 2;
  }
}

void print_rec(const ObjectExpr& e, std::string& out, int min_prec) {
  bool parens = precedence(e) < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case ObjectExpr::Kind::Gen: {
      if (e.gen == GenKind::A && e.index == 0) {
        out += 'U';
      } else {
        out += e.gen == GenKind::A ? 'A' : (e.gen == GenKind::E ? 'E' : 'L');
        out += '(' + std::to_string(e.index) + ')';
      }
      break;
    }
    case ObjectExpr::Kind::Sum:
      print_rec(*e.lhs, out, 0);
      out += " + ";
      print_rec(*e.rhs, out, 1);  // right operand of a left-associative sum
      break;
    case ObjectExpr::Kind::Tensor:
      print_rec(*e.lhs, out, 1);
      out += " * ";
      print_rec(*e.rhs, out, 2);
      break;
    case ObjectExpr::Kind::Shift:
      print_rec(*e.lhs, out, 2);
      out += '[' + std::to_string(e.amount) + ']';
      break;
    case ObjectExpr::Kind::Res:
      out += "res(";
      print_rec(*e.lhs, out, 0);
      out += ", " + std::to_string(e.amount) + ")";
      break;
    case ObjectExpr::Kind::InflFin:
      out += "<finite-object>";
      break;
  }
  if (parens) out += ')';
}

}  // namespace

ExprPtr parse_expr(const std::string& input) { return Parser(input).parse(); }

std::string print_expr(const ObjectExpr& e) {
  std::string out;
  print_rec(e, out, 0);
  return out;
}

GradedRigid eval_expr(const ObjectExpr& e, long p) {
  switch (e.kind) {
    case ObjectExpr::Kind::Gen:
      return graded_object(generator(e.gen, e.index, p));
    case ObjectExpr::Kind::Sum:
      return direct_sum(eval_expr(*e.lhs, p), eval_expr(*e.rhs, p));
    case ObjectExpr::Kind::Tensor:
      return tensor(eval_expr(*e.lhs, p), eval_expr(*e.rhs, p));
    case ObjectExpr::Kind::Shift:
      return shift(eval_expr(*e.lhs, p), e.amount);
    case ObjectExpr::Kind::Res:
      return restrict_object(eval_expr(*e.lhs, p), e.amount);
    case ObjectExpr::Kind::InflFin: {
      FiniteLevelObject f = *e.finite;
      if (f.p != p) throw std::invalid_argument("eval: finite object prime mismatch");
      return graded_object(inflate_finite(f));
    }
  }
  throw std::logic_error("eval_expr: unreachable");
}

RigidObject eval_expr_degree_zero(const ObjectExpr& e, long p) {
  GradedRigid g = eval_expr(e, p);
  if (g.entries.empty()) return zero_object(p);
  if (g.entries.size() != 1 || g.entries.begin()->first != 0)
    throw std::invalid_argument(
        "expression is graded; shifts are only meaningful for the maps command");
  return g.entries.begin()->second;
}

}  // namespace padic
