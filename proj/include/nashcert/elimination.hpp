#pragma once

#include <string>
#include <vector>

#include "nashcert/multi_poly.hpp"

namespace nashcert {

/// Sylvester matrix of p and q viewed as univariate in `var`.
///
/// Rows 0..deg_q-1 hold p's coefficients (highest first) shifted one column
/// per row; the following deg_p rows hold q's. Entries live in the inputs'
/// space and are free of `var`.
struct SylvesterMatrix {
  Var var;
  unsigned deg_p = 0;
  unsigned deg_q = 0;
  std::vector<std::vector<MultiPoly>> entries;

  std::size_t dim() const { return entries.size(); }
};

SylvesterMatrix sylvester(const MultiPoly& p, const MultiPoly& q, Var var);

/// Fraction-free (Bareiss) determinant over the polynomial ring.
MultiPoly determinant_bareiss(std::vector<std::vector<MultiPoly>> m);

struct EliminationResult {
  MultiPoly resultant;
  bool reduced = false;
  std::vector<std::string> steps;
};

/// Res_var(p, q), never zero. When the Sylvester determinant vanishes, p is
/// divided by gcd_wrt(p, q, var) and the resultant recomputed (`reduced`).
/// Degree-0 conventions: Res(c, q) = c^deg q, Res(p, c) = c^deg p, Res(c, d) = 1.
EliminationResult resultant_wrt(const MultiPoly& p, const MultiPoly& q, Var var);

/// Gcd of p and q as univariate polynomials in `var` over the fraction field
/// of the remaining variables, via the primitive remainder sequence. The
/// result is primitive in `var` and content-normalized; it is the constant 1
/// when the two are coprime.
MultiPoly gcd_wrt(const MultiPoly& p, const MultiPoly& q, Var var);

/// Full multivariate gcd (recursive, normalized). gcd(0, 0) throws.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

/// Gcd of the `var`-coefficients of p. Both results are content-normalized,
/// so p equals their product only up to a scalar.
MultiPoly content_wrt(const MultiPoly& p, Var var);
MultiPoly primitive_part_wrt(const MultiPoly& p, Var var);

/// Pseudo-remainder of a by b in `var`.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var var);

}  // namespace nashcert
