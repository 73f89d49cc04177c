#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "focal/taylor.hpp"

namespace focal {

enum class ExprKind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Function };

enum class Func { Sin, Cos, Tan, Sinh, Cosh, Exp, Log, Sqrt };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node in the single variable t.
struct Expr {
  ExprKind kind = ExprKind::Constant;
  double value = 0.0;  // Constant only
  Func func = Func::Sin;  // Function only
  ExprPtr lhs;  // operand of Negate/Function, left operand of binaries
  ExprPtr rhs;

  static ExprPtr constant(double v);
  static ExprPtr variable();
  static ExprPtr negate(ExprPtr a);
  static ExprPtr binary(ExprKind kind, ExprPtr a, ExprPtr b);
  static ExprPtr call(Func f, ExprPtr a);
};

std::string_view func_name(Func f);

/// Parses one expression. `line` and `column_offset` position error
/// messages inside a larger file.
ExprPtr parse_expr(std::string_view text, int line = 1, int column_offset = 0);

/// Fully parenthesised text that parses back to an identical tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// True when the tree does not reference t.
bool is_constant(const Expr& e);

/// Replaces every occurrence of t by `replacement`.
ExprPtr substitute(const ExprPtr& e, const ExprPtr& replacement);

/// Taylor series of e about t to the given order. Throws DomainError naming
/// the offending subexpression at singular points.
Series eval_series(const Expr& e, double t, int order);

/// Plain value of e at t.
double eval(const Expr& e, double t);

}  // namespace focal
