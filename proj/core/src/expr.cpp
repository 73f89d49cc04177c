#include "focal/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "focal/errors.hpp"

namespace focal {

ExprPtr Expr::constant(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Constant;
  e->value = v;
  return e;
}

ExprPtr Expr::variable() {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Variable;
  return e;
}

ExprPtr Expr::negate(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Negate;
  e->lhs = std::move(a);
  return e;
}

ExprPtr Expr::binary(ExprKind kind, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::call(Func f, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Function;
  e->func = f;
  e->lhs = std::move(a);
  return e;
}

std::string_view func_name(Func f) {
  switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Sinh: return "sinh";
    case Func::Cosh: return "cosh";
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
  }
  return "?";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of expression");
      fail(std::string("expected '") + c + "'");
    }
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+'))
        e = Expr::binary(ExprKind::Add, e, term());
      else if (accept('-'))
        e = Expr::binary(ExprKind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (accept('*'))
        e = Expr::binary(ExprKind::Mul, e, factor());
      else if (accept('/'))
        e = Expr::binary(ExprKind::Div, e, factor());
      else
        return e;
    }
  }

  // Unary minus binds looser than '^', so -t^2 is -(t^2).
  ExprPtr factor() {
    if (accept('-')) return Expr::negate(factor());
    ExprPtr b = base();
    if (accept('^')) return Expr::binary(ExprKind::Pow, b, exponent());
    return b;
  }

  ExprPtr exponent() {
    if (accept('-')) return Expr::negate(exponent());
    return base();
  }

  ExprPtr base() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an operand before end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("expected an operand, found '" + std::string(1, c) + "'");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string lexeme(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(lexeme.c_str(), &end);
    if (end != lexeme.c_str() + lexeme.size() || !std::isfinite(v)) {
      pos_ = start;
      fail("malformed number '" + lexeme + "'");
    }
    return Expr::constant(v);
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "t") return Expr::variable();
    static constexpr Func kFuncs[] = {Func::Sin,  Func::Cos, Func::Tan, Func::Sinh,
                                      Func::Cosh, Func::Exp, Func::Log, Func::Sqrt};
    for (Func f : kFuncs) {
      if (name == func_name(f)) {
        expect('(');
        ExprPtr arg = expr();
        expect(')');
        return Expr::call(f, arg);
      }
    }
    pos_ = start;
    if (name == "abs" || name == "sign")
      fail("'" + std::string(name) + "' is not supported: curve components must be smooth");
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

char op_char(ExprKind k) {
  switch (k) {
    case ExprKind::Add: return '+';
    case ExprKind::Sub: return '-';
    case ExprKind::Mul: return '*';
    case ExprKind::Div: return '/';
    case ExprKind::Pow: return '^';
    default: return '?';
  }
}

[[noreturn]] void domain_fail(const std::string& what, const Expr& e, double t) {
  throw DomainError(what + " in '" + to_string(e) + "' at t = " + format_number(t));
}

void require_finite(const Series& s, const Expr& e, double t) {
  for (int k = 0; k <= s.order(); ++k)
    if (!std::isfinite(s[k])) domain_fail("non-finite value", e, t);
}

}  // namespace

ExprPtr parse_expr(std::string_view text, int line, int column_offset) {
  return Parser(text, line, column_offset).parse();
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Constant:
      return e.value < 0 ? "(-" + format_number(-e.value) + ")" : format_number(e.value);
    case ExprKind::Variable: return "t";
    case ExprKind::Negate: return "(-" + to_string(*e.lhs) + ")";
    case ExprKind::Function:
      return std::string(func_name(e.func)) + "(" + to_string(*e.lhs) + ")";
    case ExprKind::Pow: return "(" + to_string(*e.lhs) + "^" + to_string(*e.rhs) + ")";
    default:
      return "(" + to_string(*e.lhs) + " " + op_char(e.kind) + " " + to_string(*e.rhs) + ")";
  }
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Constant: return a.value == b.value;
    case ExprKind::Variable: return true;
    case ExprKind::Negate: return structurally_equal(*a.lhs, *b.lhs);
    case ExprKind::Function: return a.func == b.func && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

bool is_constant(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Constant: return true;
    case ExprKind::Variable: return false;
    case ExprKind::Negate:
    case ExprKind::Function: return is_constant(*e.lhs);
    default: return is_constant(*e.lhs) && is_constant(*e.rhs);
  }
}

ExprPtr substitute(const ExprPtr& e, const ExprPtr& replacement) {
  switch (e->kind) {
    case ExprKind::Constant: return e;
    case ExprKind::Variable: return replacement;
    case ExprKind::Negate: return Expr::negate(substitute(e->lhs, replacement));
    case ExprKind::Function: return Expr::call(e->func, substitute(e->lhs, replacement));
    default:
      return Expr::binary(e->kind, substitute(e->lhs, replacement),
                          substitute(e->rhs, replacement));
  }
}

Series eval_series(const Expr& e, double t, int order) {
  switch (e.kind) {
    case ExprKind::Constant: return Series::constant(order, e.value);
    case ExprKind::Variable: return Series::variable(order, t);
    case ExprKind::Negate: return -eval_series(*e.lhs, t, order);
    case ExprKind::Add: return eval_series(*e.lhs, t, order) + eval_series(*e.rhs, t, order);
    case ExprKind::Sub: return eval_series(*e.lhs, t, order) - eval_series(*e.rhs, t, order);
    case ExprKind::Mul: return eval_series(*e.lhs, t, order) * eval_series(*e.rhs, t, order);
    case ExprKind::Div: {
      const Series den = eval_series(*e.rhs, t, order);
      if (den.value() == 0.0) domain_fail("division by zero", e, t);
      Series q = eval_series(*e.lhs, t, order) / den;
      require_finite(q, e, t);
      return q;
    }
    case ExprKind::Pow: {
      const Series b = eval_series(*e.lhs, t, order);
      if (is_constant(*e.rhs)) {
        const double p = eval(*e.rhs, t);
        if (p == std::round(p) && std::abs(p) <= 1024.0) {
          if (p < 0 && b.value() == 0.0) domain_fail("negative power of zero", e, t);
          Series r = pow(b, static_cast<int>(p));
          require_finite(r, e, t);
          return r;
        }
        if (!(b.value() > 0.0)) domain_fail("non-integer power of non-positive base", e, t);
        return pow(b, p);
      }
      if (!(b.value() > 0.0)) domain_fail("variable power of non-positive base", e, t);
      Series r = exp(eval_series(*e.rhs, t, order) * log(b));
      require_finite(r, e, t);
      return r;
    }
    case ExprKind::Function: {
      const Series a = eval_series(*e.lhs, t, order);
      Series r;
      switch (e.func) {
        case Func::Sin: r = sin(a); break;
        case Func::Cos: r = cos(a); break;
        case Func::Tan:
          if (std::cos(a.value()) == 0.0) domain_fail("pole of tan", e, t);
          r = tan(a);
          break;
        case Func::Sinh: r = sinh(a); break;
        case Func::Cosh: r = cosh(a); break;
        case Func::Exp: r = exp(a); break;
        case Func::Log:
          if (!(a.value() > 0.0)) domain_fail("log of non-positive value " + format_number(a.value()), e, t);
          r = log(a);
          break;
        case Func::Sqrt:
          if (a.value() == 0.0 && order == 0) return Series::constant(0, 0.0);
          if (!(a.value() > 0.0))
            domain_fail("sqrt of non-positive value " + format_number(a.value()), e, t);
          r = sqrt(a);
          break;
      }
      require_finite(r, e, t);
      return r;
    }
  }
  return Series::constant(order, 0.0);
}

double eval(const Expr& e, double t) { return eval_series(e, t, 0).value(); }

}  // namespace focal
