#include "nashcert/elimination.hpp"

#include <stdexcept>
#include <utility>

#include "nashcert/error.hpp"
#include "nashcert/poly_text.hpp"

namespace nashcert {

namespace {

void check_pair(const MultiPoly& p, const MultiPoly& q, Var var, const char* op) {
  if (p.space() != q.space()) {
    throw Error(ErrorCode::SpaceMismatch, std::string(op) + ": operands live in " +
                                              p.space().describe() + " and " + q.space().describe());
  }
  if (!p.space().contains(var)) {
    throw Error(ErrorCode::UnknownVariable, std::string(op) + ": " + var.name() + " is not in " +
                                                p.space().describe());
  }
  if (p.is_zero() || q.is_zero()) {
    throw Error(ErrorCode::ZeroInput, std::string(op) + ": zero polynomial operand");
  }
}

MultiPoly leading_coeff_in(const MultiPoly& p, Var var) { return coefficients_in(p, var).back(); }

MultiPoly one(const VarSpace& space) { return MultiPoly::constant(space, 1); }

}  // namespace

SylvesterMatrix sylvester(const MultiPoly& p, const MultiPoly& q, Var var) {
  check_pair(p, q, var, "sylvester");
  const auto cp = coefficients_in(p, var);
  const auto cq = coefficients_in(q, var);
  const auto dp = static_cast<unsigned>(cp.size() - 1);
  const auto dq = static_cast<unsigned>(cq.size() - 1);
  if (dp == 0 && dq == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "sylvester: both operands are free of " + var.name() + " (resultant is 1, no matrix)");
  }
  const std::size_t dim = dp + dq;
  SylvesterMatrix m{var, dp, dq, {}};
  m.entries.assign(dim, std::vector<MultiPoly>(dim, MultiPoly(p.space())));
  for (unsigned r = 0; r < dq; ++r) {
    for (unsigned k = 0; k <= dp; ++k) m.entries[r][r + k] = cp[dp - k];
  }
  for (unsigned r = 0; r < dp; ++r) {
    for (unsigned k = 0; k <= dq; ++k) m.entries[dq + r][r + k] = cq[dq - k];
  }
  return m;
}

MultiPoly determinant_bareiss(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "determinant of an empty matrix");
  const VarSpace space = m[0][0].space();
  bool negate = false;
  MultiPoly prev = one(space);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return MultiPoly(space);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(space);
    }
    prev = m[k][k];
  }
  MultiPoly det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

EliminationResult resultant_wrt(const MultiPoly& p_in, const MultiPoly& q, Var var) {
  check_pair(p_in, q, var, "resultant");
  EliminationResult out{MultiPoly(p_in.space()), false, {}};
  MultiPoly p = p_in;
  while (true) {
    const unsigned dp = deg_in(p, var);
    const unsigned dq = deg_in(q, var);
    MultiPoly res(p.space());
    if (dp == 0 && dq == 0) {
      res = one(p.space());
      out.steps.push_back("both operands free of " + var.name() + ": resultant 1");
    } else if (dp == 0) {
      res = poly_pow(p, dq);
      out.steps.push_back("first operand free of " + var.name() + ": resultant p^" + std::to_string(dq));
    } else if (dq == 0) {
      res = poly_pow(q, dp);
      out.steps.push_back("second operand free of " + var.name() + ": resultant q^" + std::to_string(dp));
    } else {
      res = determinant_bareiss(sylvester(p, q, var).entries);
      out.steps.push_back("sylvester matrix in " + var.name() + ": " + std::to_string(dp + dq) + "x" +
                          std::to_string(dp + dq) + ", Bareiss determinant has " +
                          std::to_string(res.size()) + " terms");
    }
    if (!res.is_zero()) {
      out.resultant = std::move(res);
      return out;
    }
    MultiPoly g = gcd_wrt(p, q, var);
    if (deg_in(g, var) == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "resultant vanished but operands are coprime in " + var.name());
    }
    auto reduced = divide_exact(p, g);
    if (!reduced) throw std::logic_error("gcd does not divide its operand");
    out.steps.push_back("resultant vanished; common factor " + render_poly(g) + " removed from first operand");
    out.reduced = true;
    p = std::move(*reduced);
  }
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var var) {
  const unsigned db = deg_in(b, var);
  const MultiPoly lb = leading_coeff_in(b, var);
  MultiPoly r = a;
  while (!r.is_zero()) {
    const unsigned dr = deg_in(r, var);
    if (dr < db) break;
    const MultiPoly lr = leading_coeff_in(r, var);
    r = lb * r - lr * MultiPoly::variable(r.space(), var, dr - db) * b;
  }
  return r;
}

MultiPoly content_wrt(const MultiPoly& p, Var var) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "content of the zero polynomial");
  const auto coeffs = coefficients_in(p, var);
  MultiPoly g(p.space());
  for (const MultiPoly& c : coeffs) {
    if (c.is_zero()) continue;
    if (c.is_constant()) return one(p.space());
    g = g.is_zero() ? content_normalize(c) : poly_gcd(g, c);
    if (g.is_constant()) return g;
  }
  return g;
}

MultiPoly primitive_part_wrt(const MultiPoly& p, Var var) {
  const MultiPoly c = content_wrt(p, var);
  auto q = divide_exact(p, c);
  if (!q) throw std::logic_error("content does not divide its polynomial");
  return content_normalize(*q);
}

MultiPoly gcd_wrt(const MultiPoly& p, const MultiPoly& q, Var var) {
  check_pair(p, q, var, "gcd");
  if (deg_in(p, var) == 0 || deg_in(q, var) == 0) return one(p.space());
  MultiPoly a = primitive_part_wrt(p, var);
  MultiPoly b = primitive_part_wrt(q, var);
  if (deg_in(a, var) < deg_in(b, var)) std::swap(a, b);
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return content_normalize(b);
    if (deg_in(r, var) == 0) return one(p.space());
    a = std::move(b);
    b = primitive_part_wrt(r, var);
  }
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.space() != q.space()) {
    throw Error(ErrorCode::SpaceMismatch, "gcd: operands live in different spaces");
  }
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::ZeroInput, "gcd of two zero polynomials");
  if (p.is_zero()) return content_normalize(q);
  if (q.is_zero()) return content_normalize(p);
  if (p.is_constant() || q.is_constant()) return one(p.space());

  const VarSpace& space = p.space();
  std::optional<Var> main;
  for (std::size_t s = 0; s < space.size() && !main; ++s) {
    const Var v = space.var_at(s);
    if (p.uses(v) || q.uses(v)) main = v;
  }
  const Var v = *main;
  if (!p.uses(v)) return poly_gcd(p, content_wrt(q, v));
  if (!q.uses(v)) return poly_gcd(content_wrt(p, v), q);
  const MultiPoly c = poly_gcd(content_wrt(p, v), content_wrt(q, v));
  return content_normalize(c * gcd_wrt(p, q, v));
}

}  // namespace nashcert
