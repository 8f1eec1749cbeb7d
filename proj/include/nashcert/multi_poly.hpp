#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nashcert/gaussian_rational.hpp"
#include "nashcert/var_space.hpp"

namespace nashcert {

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exps;
  GaussianRational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Three-way comparison in the canonical term order: the leading [w] t block
/// lexicographically, then total degree of the spatial slots, then the spatial
/// slots lexicographically. Returns <0, 0, >0.
int compare_monomials(const Exponents& a, const Exponents& b, std::size_t block);

/// Sparse polynomial over Q(i) in a fixed VarSpace.
///
/// Terms are stored in strictly decreasing canonical order with no zero
/// coefficients, so structural equality is polynomial equality and the
/// rendering is deterministic. Values are immutable once built.
class MultiPoly {
 public:
  explicit MultiPoly(VarSpace space);
  /// Merges duplicate monomials, drops zeros, sorts.
  MultiPoly(VarSpace space, std::vector<Term> terms);

  static MultiPoly constant(const VarSpace& space, const GaussianRational& c);
  static MultiPoly variable(const VarSpace& space, Var v, std::uint32_t power = 1);

  const VarSpace& space() const noexcept { return space_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool has_real_coefficients() const;

  /// Largest term in canonical order. Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const GaussianRational& leading_coefficient() const { return terms_.front().coef; }

  /// Whether any term has a positive exponent on v (false if v is not in the space).
  bool uses(Var v) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& p);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  VarSpace space_;
  std::vector<Term> terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_pow(const MultiPoly& p, unsigned k);

using Bindings = std::map<Var, MultiPoly>;

/// Simultaneous substitution of each bound variable by a polynomial living in
/// result_space. Unbound variables of p keep their identity and must exist in
/// result_space.
MultiPoly substitute(const MultiPoly& p, const Bindings& bindings, const VarSpace& result_space);

/// Moves p into another space by variable identity. Throws if p uses a
/// variable the target lacks.
MultiPoly reembed(const MultiPoly& p, const VarSpace& target);

/// Conjugates every coefficient.
MultiPoly conjugate_poly(const MultiPoly& p);

/// Real-coefficient polynomial with the zero set of p: p divided by a scalar
/// when p is real up to one complex unit, else p times its conjugate. Result
/// is content-normalized. Throws on zero input.
MultiPoly realify(const MultiPoly& p);

/// z_k -> x_k + i y_k, zb_k -> x_k - i y_k. Input may only use z, zb and t;
/// result lives in VarSpace::real(n).
MultiPoly phi(const MultiPoly& p);
/// x_k -> (z_k + zb_k)/2, y_k -> (z_k - zb_k)/(2i). Result in conjugate_pair(n).
MultiPoly phi_inverse(const MultiPoly& p);

/// Divides by the Gaussian-integer content after clearing denominators, then
/// rotates by a unit so the leading coefficient has re > 0 and im >= 0.
MultiPoly content_normalize(const MultiPoly& p);

struct EvalResult {
  std::complex<double> value;
  double magnitude = 0.0;  // sum over terms of |coef| * |monomial|
};

/// Evaluates with one value per slot of p.space().
EvalResult eval_poly(const MultiPoly& p, std::span<const std::complex<double>> slots);
EvalResult eval_poly(const MultiPoly& p, const std::map<Var, std::complex<double>>& point);

unsigned deg_in(const MultiPoly& p, Var v);
unsigned total_degree(const MultiPoly& p);

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

/// Coefficients c_0..c_d with p = sum c_k v^k; each c_k is v-free and lives in p's space.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v);

}  // namespace nashcert
