#include "nashcert/multi_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nashcert/error.hpp"

namespace nashcert {

int compare_monomials(const Exponents& a, const Exponents& b, std::size_t block) {
  for (std::size_t k = 0; k < block; ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t k = block; k < a.size(); ++k) {
    da += a[k];
    db += b[k];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = block; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

namespace {

struct MonomialGreater {
  std::size_t block;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare_monomials(a, b, block) > 0;
  }
};

class TermAccumulator {
 public:
  explicit TermAccumulator(const VarSpace& space) : terms_(MonomialGreater{space.block_size()}) {}

  void add(const Exponents& exps, const GaussianRational& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coef);
    if (!inserted) it->second += coef;
  }

  MultiPoly finish(const VarSpace& space) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& [exps, coef] : terms_) {
      if (!coef.is_zero()) out.push_back(Term{exps, std::move(coef)});
    }
    return MultiPoly(space, std::move(out));
  }

 private:
  std::map<Exponents, GaussianRational, MonomialGreater> terms_;
};

void require_same_space(const MultiPoly& p, const MultiPoly& q, const char* op) {
  if (p.space() != q.space()) {
    throw Error(ErrorCode::SpaceMismatch, std::string(op) + ": operands live in " +
                                              p.space().describe() + " and " + q.space().describe());
  }
}

std::size_t require_slot(const VarSpace& space, Var v) {
  auto s = space.slot(v);
  if (!s) {
    throw Error(ErrorCode::UnknownVariable, "variable " + v.name() + " is not in " + space.describe());
  }
  return *s;
}

// Gaussian integers, used only for content computation.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
};

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  // nearest integer to num/den for den > 0
  mpz_class q;
  mpz_class twice = 2 * num + den;
  mpz_class twice_den = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
  return q;
}

GaussInt gauss_mod(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.norm();
  const mpz_class num_re = a.re * b.re + a.im * b.im;
  const mpz_class num_im = a.im * b.re - a.re * b.im;
  const mpz_class q_re = round_div(num_re, n);
  const mpz_class q_im = round_div(num_im, n);
  return GaussInt{a.re - (q_re * b.re - q_im * b.im), a.im - (q_re * b.im + q_im * b.re)};
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = gauss_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(VarSpace space) : space_(std::move(space)) {}

MultiPoly::MultiPoly(VarSpace space, std::vector<Term> terms) : space_(std::move(space)) {
  const std::size_t width = space_.size();
  for (const Term& term : terms) {
    if (term.exps.size() != width) {
      throw Error(ErrorCode::SpaceMismatch, "term width does not match " + space_.describe());
    }
  }
  const MonomialGreater greater{space_.block_size()};
  const bool canonical =
      std::all_of(terms.begin(), terms.end(), [](const Term& t) { return !t.coef.is_zero(); }) &&
      std::adjacent_find(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return !greater(a.exps, b.exps);
      }) == terms.end();
  if (canonical) {
    terms_ = std::move(terms);
    return;
  }
  TermAccumulator acc(space_);
  for (const Term& term : terms) acc.add(term.exps, term.coef);
  terms_ = acc.finish(space_).terms_;
}

MultiPoly MultiPoly::constant(const VarSpace& space, const GaussianRational& c) {
  if (c.is_zero()) return MultiPoly(space);
  return MultiPoly(space, {Term{Exponents(space.size(), 0), c}});
}

MultiPoly MultiPoly::variable(const VarSpace& space, Var v, std::uint32_t power) {
  Exponents e(space.size(), 0);
  e[require_slot(space, v)] = power;
  return MultiPoly(space, {Term{std::move(e), GaussianRational(1)}});
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.front().exps;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

bool MultiPoly::has_real_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.is_real(); });
}

bool MultiPoly::uses(Var v) const {
  auto s = space_.slot(v);
  if (!s) return false;
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exps[*s] > 0; });
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  require_same_space(p, q, "add");
  const std::size_t block = p.space_.block_size();
  std::vector<Term> out;
  out.reserve(p.terms_.size() + q.terms_.size());
  auto a = p.terms_.begin();
  auto b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    int c;
    if (a == p.terms_.end()) c = -1;
    else if (b == q.terms_.end()) c = 1;
    else c = compare_monomials(a->exps, b->exps, block);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      GaussianRational s = a->coef + b->coef;
      if (!s.is_zero()) out.push_back(Term{a->exps, std::move(s)});
      ++a;
      ++b;
    }
  }
  MultiPoly r(p.space_);
  r.terms_ = std::move(out);
  return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  require_same_space(p, q, "mul");
  if (p.is_zero() || q.is_zero()) return MultiPoly(p.space_);
  TermAccumulator acc(p.space_);
  Exponents e(p.space_.size());
  for (const Term& a : p.terms_) {
    for (const Term& b : q.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exps[k] + b.exps[k];
      acc.add(e, a.coef * b.coef);
    }
  }
  return acc.finish(p.space_);
}

MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) {
  if (c.is_zero()) return MultiPoly(p.space_);
  MultiPoly out = p;
  for (Term& t : out.terms_) t.coef *= c;
  return out;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly poly_pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.space(), 1);
  MultiPoly base = p;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

MultiPoly substitute(const MultiPoly& p, const Bindings& bindings, const VarSpace& result_space) {
  const VarSpace& src = p.space();
  std::vector<std::optional<MultiPoly>> image(src.size());
  for (const auto& [var, value] : bindings) {
    auto s = src.slot(var);
    if (!s) {
      throw Error(ErrorCode::UnknownVariable,
                  "binding for " + var.name() + " which is not in " + src.describe());
    }
    if (value.space() != result_space) {
      throw Error(ErrorCode::SpaceMismatch, "binding for " + var.name() + " lives in " +
                                                value.space().describe() + ", expected " +
                                                result_space.describe());
    }
    image[*s] = value;
  }
  // Unbound variables map to themselves; only the used ones must exist in the target.
  std::vector<std::optional<std::size_t>> identity_slot(src.size());
  for (std::size_t s = 0; s < src.size(); ++s) {
    if (image[s]) continue;
    const Var v = src.var_at(s);
    if (!p.uses(v)) continue;
    auto target = result_space.slot(v);
    if (!target) {
      throw Error(ErrorCode::UnknownVariable, "unbound variable " + v.name() + " is not in " +
                                                  result_space.describe());
    }
    identity_slot[s] = target;
  }

  std::vector<std::vector<MultiPoly>> powers(src.size());
  auto power_of = [&](std::size_t s, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(MultiPoly::constant(result_space, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * *image[s]);
    return cache[k];
  };

  TermAccumulator acc(result_space);
  for (const Term& term : p.terms()) {
    Exponents shift(result_space.size(), 0);
    MultiPoly product = MultiPoly::constant(result_space, term.coef);
    for (std::size_t s = 0; s < src.size() && !product.is_zero(); ++s) {
      const std::uint32_t k = term.exps[s];
      if (k == 0) continue;
      if (image[s]) {
        product = product * power_of(s, k);
      } else {
        shift[*identity_slot[s]] += k;
      }
    }
    for (const Term& t : product.terms()) {
      Exponents e = t.exps;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += shift[k];
      acc.add(e, t.coef);
    }
  }
  return acc.finish(result_space);
}

MultiPoly reembed(const MultiPoly& p, const VarSpace& target) {
  if (p.space() == target) return p;
  return substitute(p, {}, target);
}

MultiPoly conjugate_poly(const MultiPoly& p) {
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  for (Term& t : out) t.coef = t.coef.conj();
  return MultiPoly(p.space(), std::move(out));
}

MultiPoly content_normalize(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot normalize the zero polynomial");
  mpz_class lcm = 1;
  for (const Term& t : p.terms()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coef.re().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coef.im().get_den_mpz_t());
  }
  std::vector<GaussInt> ints;
  ints.reserve(p.size());
  GaussInt g{0, 0};
  for (const Term& t : p.terms()) {
    mpq_class re = t.coef.re() * lcm;
    mpq_class im = t.coef.im() * lcm;
    ints.push_back(GaussInt{re.get_num(), im.get_num()});
    g = gauss_gcd(std::move(g), ints.back());
  }
  // Rotate so the leading coefficient, after division by g, lands in
  // re > 0, im >= 0. Folding the unit into g keeps a single division pass.
  const mpz_class n = g.norm();
  auto div_by_g = [&](const GaussInt& a) {
    return GaussInt{(a.re * g.re + a.im * g.im) / n, (a.im * g.re - a.re * g.im) / n};
  };
  GaussInt lead = div_by_g(ints.front());
  while (!(sgn(lead.re) > 0 && sgn(lead.im) >= 0)) {
    // dividing by (g * i) rotates the quotient by -i
    g = GaussInt{-g.im, g.re};
    lead = GaussInt{lead.im, -lead.re};
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (std::size_t k = 0; k < ints.size(); ++k) {
    GaussInt q = div_by_g(ints[k]);
    out.push_back(Term{p.terms()[k].exps, GaussianRational(mpq_class(q.re), mpq_class(q.im))});
  }
  return MultiPoly(p.space(), std::move(out));
}

MultiPoly realify(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot realify the zero polynomial");
  const GaussianRational inv = GaussianRational(1) / p.leading_coefficient();
  MultiPoly unit_scaled = inv * p;
  if (unit_scaled.has_real_coefficients()) return content_normalize(unit_scaled);
  return content_normalize(p * conjugate_poly(p));
}

MultiPoly phi(const MultiPoly& p) {
  const int n = p.space().n();
  const VarSpace source = VarSpace::conjugate_pair(n);
  const VarSpace target = VarSpace::real(n);
  const MultiPoly q = reembed(p, source);
  const GaussianRational i = GaussianRational::i();
  Bindings b;
  for (int k = 1; k <= n; ++k) {
    const MultiPoly x = MultiPoly::variable(target, Var::x(k));
    const MultiPoly iy = i * MultiPoly::variable(target, Var::y(k));
    b.emplace(Var::z(k), x + iy);
    b.emplace(Var::zbar(k), x - iy);
  }
  return substitute(q, b, target);
}

MultiPoly phi_inverse(const MultiPoly& p) {
  const int n = p.space().n();
  const VarSpace source = VarSpace::real(n);
  const VarSpace target = VarSpace::conjugate_pair(n);
  const MultiPoly q = reembed(p, source);
  const GaussianRational half(mpq_class(1, 2));
  const GaussianRational minus_half_i(0, mpq_class(-1, 2));  // 1/(2i)
  Bindings b;
  for (int k = 1; k <= n; ++k) {
    const MultiPoly z = MultiPoly::variable(target, Var::z(k));
    const MultiPoly zb = MultiPoly::variable(target, Var::zbar(k));
    b.emplace(Var::x(k), half * (z + zb));
    b.emplace(Var::y(k), minus_half_i * (z - zb));
  }
  return substitute(q, b, target);
}

// ---------------------------------------------------------------------------

EvalResult eval_poly(const MultiPoly& p, std::span<const std::complex<double>> slots) {
  const std::size_t width = p.space().size();
  if (slots.size() != width) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(width) +
                                                  " values for " + p.space().describe() + ", got " +
                                                  std::to_string(slots.size()));
  }
  std::vector<std::uint32_t> max_exp(width, 0);
  for (const Term& t : p.terms()) {
    for (std::size_t s = 0; s < width; ++s) max_exp[s] = std::max(max_exp[s], t.exps[s]);
  }
  std::vector<std::vector<std::complex<double>>> powers(width);
  for (std::size_t s = 0; s < width; ++s) {
    powers[s].resize(max_exp[s] + 1);
    powers[s][0] = 1.0;
    for (std::uint32_t k = 1; k <= max_exp[s]; ++k) powers[s][k] = powers[s][k - 1] * slots[s];
  }
  EvalResult r{{0.0, 0.0}, 0.0};
  for (const Term& t : p.terms()) {
    std::complex<double> term = t.coef.to_complex();
    for (std::size_t s = 0; s < width; ++s) {
      if (t.exps[s]) term *= powers[s][t.exps[s]];
    }
    r.value += term;
    r.magnitude += std::abs(term);
  }
  return r;
}

EvalResult eval_poly(const MultiPoly& p, const std::map<Var, std::complex<double>>& point) {
  std::vector<std::complex<double>> slots(p.space().size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const Var v = p.space().var_at(s);
    auto it = point.find(v);
    if (it == point.end()) {
      if (p.uses(v)) throw Error(ErrorCode::InvalidArgument, "no value for variable " + v.name());
      continue;
    }
    slots[s] = it->second;
  }
  return eval_poly(p, slots);
}

unsigned deg_in(const MultiPoly& p, Var v) {
  const std::size_t s = require_slot(p.space(), v);
  unsigned d = 0;
  for (const Term& t : p.terms()) d = std::max<unsigned>(d, t.exps[s]);
  return d;
}

unsigned total_degree(const MultiPoly& p) {
  unsigned d = 0;
  for (const Term& t : p.terms()) {
    d = std::max<unsigned>(d, std::accumulate(t.exps.begin(), t.exps.end(), 0U));
  }
  return d;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  require_same_space(p, q, "divide");
  if (q.is_zero()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
  const VarSpace& space = p.space();
  if (p.is_zero()) return MultiPoly(space);

  const Term& lead = q.leading_term();
  const GaussianRational lead_inv = GaussianRational(1) / lead.coef;
  std::map<Exponents, GaussianRational, MonomialGreater> rem(MonomialGreater{space.block_size()});
  for (const Term& t : p.terms()) rem.emplace(t.exps, t.coef);

  std::vector<Term> quotient;
  const std::size_t width = space.size();
  while (!rem.empty()) {
    auto first = rem.begin();
    Exponents qe(width);
    for (std::size_t s = 0; s < width; ++s) {
      if (first->first[s] < lead.exps[s]) return std::nullopt;
      qe[s] = first->first[s] - lead.exps[s];
    }
    const GaussianRational qc = first->second * lead_inv;
    for (const Term& t : q.terms()) {
      Exponents e(width);
      for (std::size_t s = 0; s < width; ++s) e[s] = t.exps[s] + qe[s];
      auto [it, inserted] = rem.try_emplace(std::move(e), -(qc * t.coef));
      if (!inserted) {
        it->second -= qc * t.coef;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.push_back(Term{std::move(qe), qc});
  }
  return MultiPoly(space, std::move(quotient));
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, Var v) {
  const std::size_t s = require_slot(p.space(), v);
  const unsigned d = deg_in(p, v);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const Term& t : p.terms()) {
    Term stripped = t;
    stripped.exps[s] = 0;
    buckets[t.exps[s]].push_back(std::move(stripped));
  }
  std::vector<MultiPoly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.emplace_back(p.space(), std::move(b));
  return out;
}

}  // namespace nashcert
