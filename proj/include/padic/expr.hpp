#pragma once

#include "padic/homext.hpp"
#include "padic/rigid.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace padic {

struct ObjectExpr;
using ExprPtr = std::shared_ptr<const ObjectExpr>;

/// AST for object expressions. The grammar is
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := GEN '(' nat ')' | factor '[' int ']'
///           | 'res' '(' expr ',' nat ')' | '(' expr ')'
/// with GEN one of A, E, L and the bare token U standing for A(0).
/// InflFin nodes are built programmatically, not by the parser.
struct ObjectExpr {
  enum class Kind { Gen, Sum, Tensor, Shift, Res, InflFin };
  Kind kind = Kind::Gen;
  GenKind gen = GenKind::A;
  int index = 0;  // Gen
  ExprPtr lhs, rhs;  // Sum/Tensor children; lhs also carries Shift/Res operand
  int amount = 0;    // Shift degree or Res level
  std::shared_ptr<const FiniteLevelObject> finite;  // InflFin
};

bool expr_equal(const ObjectExpr& a, const ObjectExpr& b);

ExprPtr make_gen(GenKind g, int index);
ExprPtr make_sum(ExprPtr l, ExprPtr r);
ExprPtr make_tensor(ExprPtr l, ExprPtr r);
ExprPtr make_shift(ExprPtr e, int d);
ExprPtr make_res(ExprPtr e, int n);
ExprPtr make_inflfin(FiniteLevelObject finite);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, size_t offset)
      : std::runtime_error(message), offset(offset) {}
  size_t offset;
};

/// Whitespace-insensitive recursive-descent parser; throws ParseError with
/// the offending offset. Negative generator indices are rejected; shift
/// amounts may be negative.
ExprPtr parse_expr(const std::string& input);

/// Canonical printer; parse_expr(print_expr(e)) reproduces e.
std::string print_expr(const ObjectExpr& e);

/// Evaluation to a graded object; the prime comes from the configuration,
/// not the syntax.
GradedRigid eval_expr(const ObjectExpr& e, long p);

/// Evaluation for commands that need a plain object: the expression must be
/// concentrated in degree zero. Throws std::invalid_argument otherwise.
RigidObject eval_expr_degree_zero(const ObjectExpr& e, long p);

}  // namespace padic
