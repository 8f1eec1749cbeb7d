#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "nashcert/gaussian_rational.hpp"

namespace nashcert {

enum class ExprKind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Root, Conj };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  GaussianRational constant;  // Constant
  int var_index = 0;          // Variable (1-based)
  int integer = 0;            // Pow exponent, Root degree
  std::vector<ExprPtr> children;
};

/// Immutable algebraic-function expression over z1..zn.
class ExprAST {
 public:
  explicit ExprAST(ExprPtr root);

  static ExprAST constant(const GaussianRational& c);
  static ExprAST variable(int k);
  static ExprAST unary(ExprKind kind, const ExprAST& a);
  static ExprAST binary(ExprKind kind, const ExprAST& a, const ExprAST& b);
  static ExprAST power(const ExprAST& a, int exponent);
  static ExprAST root(int degree, const ExprAST& a);

  const ExprNode& node() const { return *root_; }
  const ExprPtr& ptr() const { return root_; }

  /// False iff a conj node occurs anywhere.
  bool holomorphic() const { return holomorphic_; }
  /// Largest variable index used, 0 for constant expressions.
  int max_var_index() const { return max_var_; }

  friend bool operator==(const ExprAST& a, const ExprAST& b);

 private:
  ExprPtr root_;
  bool holomorphic_;
  int max_var_;
};

/// Grammar (loosest to tightest): + - ; * / ; unary - ; ^ (right assoc,
/// integer exponent). Atoms: integers, i, 2i, z<k>, parentheses,
/// sqrt(e), root(k, e), conj(e). Throws ParseError with line/column.
ExprAST parse_expr(const std::string& text);

/// Fully parenthesized text that reparses to the same tree.
std::string render_expr(const ExprAST& e);

inline std::ostream& operator<<(std::ostream& os, const ExprAST& e) { return os << render_expr(e); }

struct EvalGuard {
  /// Denominators with modulus below this, and root arguments within this
  /// distance of the cut (-inf, 0], make the value undefined.
  double delta = 1e-12;
};

/// Principal-branch double evaluation at z = point (point.size() must be at
/// least max_var_index(), else Error(DimensionMismatch)). nullopt means
/// undefined: a guard tripped or the value is not finite.
std::optional<std::complex<double>> eval_expr(const ExprAST& e, std::span<const std::complex<double>> point,
                                              EvalGuard guard = {});

}  // namespace nashcert
