#include "nashcert/expr.hpp"

#include <cctype>
#include <cmath>
#include <set>

#include "nashcert/error.hpp"

namespace nashcert {

namespace {

bool same_tree(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind || a.var_index != b.var_index || a.integer != b.integer || a.constant != b.constant ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k) {
    if (!same_tree(*a.children[k], *b.children[k])) return false;
  }
  return true;
}

bool scan_holomorphic(const ExprNode& n) {
  if (n.kind == ExprKind::Conj) return false;
  for (const auto& c : n.children) {
    if (!scan_holomorphic(*c)) return false;
  }
  return true;
}

int scan_max_var(const ExprNode& n) {
  int m = n.kind == ExprKind::Variable ? n.var_index : 0;
  for (const auto& c : n.children) m = std::max(m, scan_max_var(*c));
  return m;
}

ExprPtr make(ExprKind kind, std::vector<ExprPtr> children, int integer = 0) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->integer = integer;
  n->children = std::move(children);
  return n;
}

}  // namespace

ExprAST::ExprAST(ExprPtr root)
    : root_(std::move(root)), holomorphic_(scan_holomorphic(*root_)), max_var_(scan_max_var(*root_)) {}

ExprAST ExprAST::constant(const GaussianRational& c) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Constant;
  n->constant = c;
  return ExprAST(n);
}

ExprAST ExprAST::variable(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "variable index must be >= 1");
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Variable;
  n->var_index = k;
  return ExprAST(n);
}

ExprAST ExprAST::unary(ExprKind kind, const ExprAST& a) {
  if (kind != ExprKind::Negate && kind != ExprKind::Conj) {
    throw Error(ErrorCode::InvalidArgument, "not a unary expression kind");
  }
  return ExprAST(make(kind, {a.root_}));
}

ExprAST ExprAST::binary(ExprKind kind, const ExprAST& a, const ExprAST& b) {
  if (kind != ExprKind::Add && kind != ExprKind::Sub && kind != ExprKind::Mul && kind != ExprKind::Div) {
    throw Error(ErrorCode::InvalidArgument, "not a binary expression kind");
  }
  return ExprAST(make(kind, {a.root_, b.root_}));
}

ExprAST ExprAST::power(const ExprAST& a, int exponent) { return ExprAST(make(ExprKind::Pow, {a.root_}, exponent)); }

ExprAST ExprAST::root(int degree, const ExprAST& a) {
  if (degree < 2) throw Error(ErrorCode::InvalidArgument, "root degree must be >= 2");
  return ExprAST(make(ExprKind::Root, {a.root_}, degree));
}

bool operator==(const ExprAST& a, const ExprAST& b) { return same_tree(*a.root_, *b.root_); }

// ---------------------------------------------------------------------------

namespace {

const std::set<std::string>& transcendental_names() {
  static const std::set<std::string> names{"exp", "log", "ln", "sin", "cos", "tan", "sinh", "cosh",
                                           "tanh", "asin", "acos", "atan", "pow", "abs"};
  return names;
}

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  ExprAST parse() {
    ExprAST e = additive();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  ExprAST additive() {
    ExprAST lhs = multiplicative();
    while (true) {
      if (eat('+')) {
        lhs = ExprAST::binary(ExprKind::Add, lhs, multiplicative());
      } else if (eat('-')) {
        lhs = ExprAST::binary(ExprKind::Sub, lhs, multiplicative());
      } else {
        return lhs;
      }
    }
  }

  ExprAST multiplicative() {
    ExprAST lhs = unary();
    while (true) {
      if (eat('*')) {
        lhs = ExprAST::binary(ExprKind::Mul, lhs, unary());
      } else if (eat('/')) {
        lhs = ExprAST::binary(ExprKind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprAST unary() {
    if (eat('-')) return ExprAST::unary(ExprKind::Negate, unary());
    return power();
  }

  ExprAST power() {
    ExprAST base = atom();
    if (!eat('^')) return base;
    int k = exponent();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') fail("chained exponents need parentheses");
    return ExprAST::power(base, k);
  }

  int exponent() {
    const bool paren = eat('(');
    const bool neg = eat('-');
    long k = small_integer();
    if (paren && !eat(')')) fail("expected ')'");
    return static_cast<int>(neg ? -k : k);
  }

  ExprAST atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprAST inner = additive();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class value(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == 'i' && !ident_char_at(pos_ + 1)) {
        ++pos_;
        return ExprAST::constant(GaussianRational(0, mpq_class(value)));
      }
      return ExprAST::constant(GaussianRational(mpq_class(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (ident_char_at(pos_)) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "i") return ExprAST::constant(GaussianRational::i());
      if (name.size() > 1 && name[0] == 'z' && name[1] != '0' &&
          name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() < 7) {
        return ExprAST::variable(std::stoi(name.substr(1)));
      }
      if (name == "sqrt" || name == "conj") {
        expect('(');
        ExprAST arg = additive();
        expect(')');
        return name == "sqrt" ? ExprAST::root(2, arg) : ExprAST::unary(ExprKind::Conj, arg);
      }
      if (name == "root") {
        expect('(');
        long k = small_integer();
        if (k < 2) fail("root degree must be >= 2");
        expect(',');
        ExprAST arg = additive();
        expect(')');
        return ExprAST::root(static_cast<int>(k), arg);
      }
      pos_ = start;
      if (transcendental_names().contains(name)) {
        fail("'" + name + "' is not an algebraic operation");
      }
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  long small_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  bool ident_char_at(std::size_t k) const {
    return k < s_.size() && std::isalnum(static_cast<unsigned char>(s_[k]));
  }
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

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < pos_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("expression: " + what, line, col);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string render_constant(const GaussianRational& c) {
  const bool plain_int = c.re().get_den() == 1 && c.im().get_den() == 1;
  if (plain_int && c.is_real() && sgn(c.re()) >= 0) return c.re().get_str();
  if (plain_int && sgn(c.re()) == 0 && sgn(c.im()) > 0) return c.im() == 1 ? "i" : c.im().get_str() + "i";
  // Not produced by the parser; this reparses to an equal value, not an equal tree.
  return "(" + c.re().get_str() + " + " + c.im().get_str() + "*i)";
}

std::string render(const ExprNode& n) {
  switch (n.kind) {
    case ExprKind::Constant: return render_constant(n.constant);
    case ExprKind::Variable: return "z" + std::to_string(n.var_index);
    case ExprKind::Negate: return "(-" + render(*n.children[0]) + ")";
    case ExprKind::Add: return "(" + render(*n.children[0]) + " + " + render(*n.children[1]) + ")";
    case ExprKind::Sub: return "(" + render(*n.children[0]) + " - " + render(*n.children[1]) + ")";
    case ExprKind::Mul: return "(" + render(*n.children[0]) + " * " + render(*n.children[1]) + ")";
    case ExprKind::Div: return "(" + render(*n.children[0]) + " / " + render(*n.children[1]) + ")";
    case ExprKind::Pow: {
      const std::string k = n.integer < 0 ? "(" + std::to_string(n.integer) + ")" : std::to_string(n.integer);
      const ExprNode& base = *n.children[0];
      const std::string b = render(base);
      return (base.kind == ExprKind::Pow ? "(" + b + ")" : b) + "^" + k;
    }
    case ExprKind::Root:
      if (n.integer == 2) return "sqrt(" + render(*n.children[0]) + ")";
      return "root(" + std::to_string(n.integer) + ", " + render(*n.children[0]) + ")";
    case ExprKind::Conj: return "conj(" + render(*n.children[0]) + ")";
  }
  return "?";
}

using C = std::complex<double>;

std::optional<C> eval(const ExprNode& n, std::span<const C> point, double delta) {
  switch (n.kind) {
    case ExprKind::Constant: return n.constant.to_complex();
    case ExprKind::Variable: return point[static_cast<std::size_t>(n.var_index - 1)];
    default: break;
  }
  std::vector<C> args;
  args.reserve(n.children.size());
  for (const auto& c : n.children) {
    auto v = eval(*c, point, delta);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  C out;
  switch (n.kind) {
    case ExprKind::Negate: out = -args[0]; break;
    case ExprKind::Add: out = args[0] + args[1]; break;
    case ExprKind::Sub: out = args[0] - args[1]; break;
    case ExprKind::Mul: out = args[0] * args[1]; break;
    case ExprKind::Div:
      if (std::abs(args[1]) < delta || args[1] == C(0.0)) return std::nullopt;
      out = args[0] / args[1];
      break;
    case ExprKind::Pow: {
      C base = args[0];
      int k = n.integer;
      if (k < 0) {
        if (std::abs(base) < delta || base == C(0.0)) return std::nullopt;
        base = C(1.0) / base;
        k = -k;
      }
      out = 1.0;
      while (k) {
        if (k & 1) out *= base;
        k >>= 1;
        if (k) base *= base;
      }
      break;
    }
    case ExprKind::Root: {
      const C a = args[0];
      const double dist = a.real() <= 0.0 ? std::abs(a.imag()) : std::abs(a);
      if (dist < delta) return std::nullopt;
      if (n.integer == 2) {
        out = std::sqrt(a);
      } else {
        out = std::polar(std::pow(std::abs(a), 1.0 / n.integer), std::arg(a) / n.integer);
      }
      break;
    }
    case ExprKind::Conj: out = std::conj(args[0]); break;
    default: return std::nullopt;
  }
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) return std::nullopt;
  return out;
}

}  // namespace

ExprAST parse_expr(const std::string& text) { return ExprParser(text).parse(); }

std::string render_expr(const ExprAST& e) { return render(e.node()); }

std::optional<std::complex<double>> eval_expr(const ExprAST& e, std::span<const std::complex<double>> point,
                                              EvalGuard guard) {
  if (point.size() < static_cast<std::size_t>(e.max_var_index())) {
    throw Error(ErrorCode::DimensionMismatch, "expression uses z" + std::to_string(e.max_var_index()) +
                                                  " but the point has " + std::to_string(point.size()) +
                                                  " coordinates");
  }
  return eval(e.node(), point, guard.delta);
}

}  // namespace nashcert
