#include "nashcert/certificates.hpp"

#include "nashcert/elimination.hpp"
#include "nashcert/error.hpp"
#include "nashcert/poly_text.hpp"

namespace nashcert {

std::string_view to_string(FunctionPart part) {
  switch (part) {
    case FunctionPart::F: return "f";
    case FunctionPart::RealPart: return "re";
    case FunctionPart::ImagPart: return "im";
  }
  return "?";
}

FunctionPart parse_function_part(std::string_view text) {
  if (text == "f") return FunctionPart::F;
  if (text == "re") return FunctionPart::RealPart;
  if (text == "im") return FunctionPart::ImagPart;
  throw Error(ErrorCode::InvalidArgument, "unknown function part '" + std::string(text) + "' (expected f, re or im)");
}

std::string_view to_string(CertFlag flag) {
  switch (flag) {
    case CertFlag::RequiresVerification: return "requires-verification";
    case CertFlag::Reduced: return "reduced";
    case CertFlag::FactorStripped: return "degenerate-factor-stripped";
    case CertFlag::ConstantShortcut: return "constant-function";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxLoggedChars = 400;

std::string brief(const MultiPoly& p) {
  std::string s = render_poly(p);
  if (s.size() <= kMaxLoggedChars) return s;
  return "<" + std::to_string(p.size()) + " terms, total degree " + std::to_string(total_degree(p)) + ">";
}

MultiPoly var(const VarSpace& s, Var v) { return MultiPoly::variable(s, v); }
MultiPoly cst(const VarSpace& s, const GaussianRational& c) { return MultiPoly::constant(s, c); }

void require_part(const AnnihilatorCertificate& c, FunctionPart expected, const char* op) {
  if (c.part != expected) {
    throw Error(ErrorCode::IncompatiblePart, std::string(op) + ": expected a certificate for " +
                                                 std::string(to_string(expected)) + ", got " +
                                                 std::string(to_string(c.part)));
  }
}

void require_t(const MultiPoly& p, const char* op) {
  if (deg_in(p, Var::t()) == 0) {
    throw Error(ErrorCode::Degenerate, std::string(op) + ": annihilator " + brief(p) +
                                           " does not involve t (degenerate)");
  }
}

bool is_zero_vector(const std::vector<GaussianRational>& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string render_tuple(const std::vector<GaussianRational>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

}  // namespace

AnnihilatorCertificate make_certificate(const MultiPoly& poly, FunctionPart part,
                                        std::vector<std::string> derivation, std::set<CertFlag> flags) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroInput, "certificate polynomial is zero");
  const int n = poly.space().n();
  const VarSpace target = part == FunctionPart::F ? VarSpace::complex(n) : VarSpace::real(n);
  MultiPoly placed(target);
  try {
    placed = reembed(poly, target);
  } catch (const Error& e) {
    throw Error(ErrorCode::IncompatiblePart, "certificate for " + std::string(to_string(part)) +
                                                 " must use only " + target.describe() + ": " + e.what());
  }
  MultiPoly normalized = content_normalize(placed);
  if (part != FunctionPart::F && !normalized.has_real_coefficients()) {
    throw Error(ErrorCode::IncompatiblePart,
                "certificate for " + std::string(to_string(part)) + " must have real coefficients");
  }
  return AnnihilatorCertificate{std::move(normalized), part, std::move(derivation), std::move(flags), std::nullopt};
}

SplitResult split_complex(const AnnihilatorCertificate& input) {
  require_part(input, FunctionPart::F, "split");
  const MultiPoly& p = input.poly;
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "split: zero annihilator");
  require_t(p, "split");
  const int n = p.space().n();
  const VarSpace real = VarSpace::real(n);
  const VarSpace pair = VarSpace::conjugate_pair(n);
  const VarSpace elim = pair.with_w();
  const Var t = Var::t();
  const Var w = Var::w();

  bool depends_on_z = false;
  for (int k = 1; k <= n; ++k) depends_on_z = depends_on_z || p.uses(Var::z(k));
  if (!depends_on_z && deg_in(p, t) == 1) {
    // P = a t + b with constants a, b: f is the constant -b/a.
    const auto c = coefficients_in(p, t);
    const GaussianRational b = c[0].is_zero() ? GaussianRational(0) : c[0].leading_coefficient();
    const GaussianRational value = -b / c[1].leading_coefficient();
    const std::string note = "constant function f = " + value.str();
    return SplitResult{
        make_certificate(var(real, t) - cst(real, GaussianRational(value.re())), FunctionPart::RealPart,
                         {note, "Re f = " + value.re().get_str()}, {CertFlag::ConstantShortcut}),
        make_certificate(var(real, t) - cst(real, GaussianRational(value.im())), FunctionPart::ImagPart,
                         {note, "Im f = " + value.im().get_str()}, {CertFlag::ConstantShortcut})};
  }

  std::vector<std::string> common{"input P = " + brief(p)};
  const MultiPoly pr = realify(p);
  common.push_back("realify: P^r = " + brief(pr));

  const MultiPoly lhs = substitute(pr, {{t, var(elim, w)}}, elim);
  common.push_back("P^r(z, w) = " + brief(lhs));

  auto branch = [&](FunctionPart part) {
    std::vector<std::string> log = common;
    std::set<CertFlag> flags;
    Bindings b;
    for (int k = 1; k <= n; ++k) b.emplace(Var::z(k), var(elim, Var::zbar(k)));
    const MultiPoly shift = var(elim, t) - var(elim, w);
    const bool re = part == FunctionPart::RealPart;
    b.emplace(t, re ? shift : -shift);
    const MultiPoly rhs = substitute(pr, b, elim);
    log.push_back(std::string(re ? "P^r(zb, t - w)" : "P^r(zb, -(t - w))") + " = " + brief(rhs));

    EliminationResult er = resultant_wrt(lhs, rhs, w);
    for (auto& s : er.steps) log.push_back("elimination: " + s);
    if (er.reduced) flags.insert(CertFlag::Reduced);
    const MultiPoly r = reembed(er.resultant, pair);
    log.push_back("resultant in w: R = " + brief(r));

    MultiPoly q = phi(r);
    log.push_back("phi (z -> x + i y, zb -> x - i y): Q = " + brief(q));
    if (re) {
      q = realify(q);
      log.push_back("realify: " + brief(q));
      q = substitute(q, {{t, cst(real, 2) * var(real, t)}}, real);
      log.push_back("rescale t -> 2t: " + brief(q));
    } else {
      q = substitute(q, {{t, cst(real, GaussianRational(0, 2)) * var(real, t)}}, real);
      log.push_back("rescale t -> 2i t: " + brief(q));
      q = realify(q);
      log.push_back("realify: " + brief(q));
    }
    AnnihilatorCertificate cert = make_certificate(q, part, std::move(log), std::move(flags));
    cert.derivation.push_back("normalize: " + brief(cert.poly));
    return cert;
  };

  return SplitResult{branch(FunctionPart::RealPart), branch(FunctionPart::ImagPart)};
}

AnnihilatorCertificate cartan_lift(const AnnihilatorCertificate& a, const BaseData& base) {
  require_part(a, FunctionPart::RealPart, "lift");
  if (a.poly.is_zero()) throw Error(ErrorCode::ZeroInput, "lift: zero annihilator");
  const int n = a.space().n();
  if (base.z0.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DimensionMismatch, "lift: base point has " + std::to_string(base.z0.size()) +
                                                  " coordinates, annihilator needs " + std::to_string(n));
  }
  require_t(a.poly, "lift");
  const VarSpace real = VarSpace::real(n);
  const VarSpace complex = VarSpace::complex(n);
  const Var t = Var::t();
  std::vector<std::string> log{"input A = " + brief(a.poly)};
  std::set<CertFlag> flags;

  // Recentre so that the base point is the origin and f vanishes there.
  Bindings shift;
  for (int k = 1; k <= n; ++k) {
    const auto& c = base.z0[static_cast<std::size_t>(k - 1)];
    shift.emplace(Var::x(k), var(real, Var::x(k)) + cst(real, GaussianRational(c.re())));
    shift.emplace(Var::y(k), var(real, Var::y(k)) + cst(real, GaussianRational(c.im())));
  }
  shift.emplace(t, var(real, t) + cst(real, GaussianRational(base.w0.re())));
  const MultiPoly centred = substitute(a.poly, shift, real);
  log.push_back("recentre at z0 = " + render_tuple(base.z0) + ", f(z0) = " + base.w0.str() + ": " + brief(centred));

  MultiPoly doubled = content_normalize(
      substitute(centred, {{t, cst(real, GaussianRational(mpq_class(1, 2))) * var(real, t)}}, real));
  log.push_back("rescale t -> t/2 (annihilates 2 Re f): " + brief(doubled));

  Bindings cartan;
  const GaussianRational half(mpq_class(1, 2));
  const GaussianRational over_2i(0, mpq_class(-1, 2));
  for (int k = 1; k <= n; ++k) {
    cartan.emplace(Var::x(k), cst(complex, half) * var(complex, Var::z(k)));
    cartan.emplace(Var::y(k), cst(complex, over_2i) * var(complex, Var::z(k)));
  }
  MultiPoly image = substitute(doubled, cartan, complex);
  while (image.is_zero()) {
    bool stripped = false;
    for (int k = 1; k <= n && !stripped; ++k) {
      const MultiPoly circle = var(real, Var::x(k)) * var(real, Var::x(k)) + var(real, Var::y(k)) * var(real, Var::y(k));
      if (auto q = divide_exact(doubled, circle)) {
        doubled = std::move(*q);
        log.push_back("substitution vanished; stripped factor " + render_poly(circle) + ": " + brief(doubled));
        flags.insert(CertFlag::FactorStripped);
        stripped = true;
      }
    }
    if (!stripped) {
      throw Error(ErrorCode::Degenerate, "lift: degenerate annihilator " + brief(doubled) +
                                             " vanishes under x -> z/2, y -> z/(2i)");
    }
    image = substitute(doubled, cartan, complex);
  }
  if (deg_in(image, t) == 0) {
    throw Error(ErrorCode::Degenerate, "lift: substitution image " + brief(image) + " does not involve t");
  }
  image = content_normalize(image);
  log.push_back("substitute x -> z/2, y -> z/(2i): " + brief(image));

  Bindings unshift;
  for (int k = 1; k <= n; ++k) {
    unshift.emplace(Var::z(k), var(complex, Var::z(k)) - cst(complex, base.z0[static_cast<std::size_t>(k - 1)]));
  }
  unshift.emplace(t, var(complex, t) - cst(complex, base.w0));
  const MultiPoly q = substitute(image, unshift, complex);
  log.push_back("undo recentring: " + brief(q));

  if (n > 1) {
    flags.insert(CertFlag::RequiresVerification);
    log.push_back("n > 1: componentwise substitution, numeric verification required");
  }
  AnnihilatorCertificate cert = make_certificate(q, FunctionPart::F, std::move(log), std::move(flags));
  cert.derivation.push_back("normalize: " + brief(cert.poly));
  return cert;
}

std::vector<std::vector<GaussianRational>> slice_candidates(int n) {
  constexpr std::size_t kBudget = 32;
  const auto dim = static_cast<std::size_t>(n);
  std::vector<std::vector<GaussianRational>> out{std::vector<GaussianRational>(dim)};
  auto push = [&](std::vector<GaussianRational> v) {
    if (out.size() >= kBudget) return;
    for (const auto& seen : out) {
      if (seen == v) return;
    }
    out.push_back(std::move(v));
  };
  for (long k = 1; out.size() < kBudget; ++k) {
    for (const mpq_class& s : {mpq_class(k), mpq_class(1, k + 1), mpq_class(-k), mpq_class(-1, k + 1)}) {
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<GaussianRational> v(dim);
        v[j] = GaussianRational(s);
        push(std::move(v));
      }
      push(std::vector<GaussianRational>(dim, GaussianRational(s)));
    }
  }
  return out;
}

AnnihilatorCertificate merge_real_pair(const AnnihilatorCertificate& p1, const AnnihilatorCertificate& p2,
                                       const std::optional<std::vector<GaussianRational>>& slice) {
  require_part(p1, FunctionPart::RealPart, "merge");
  require_part(p2, FunctionPart::ImagPart, "merge");
  if (p1.poly.is_zero() || p2.poly.is_zero()) throw Error(ErrorCode::ZeroInput, "merge: zero annihilator");
  if (p1.space() != p2.space()) {
    throw Error(ErrorCode::SpaceMismatch, "merge: annihilators live in " + p1.space().describe() + " and " +
                                              p2.space().describe());
  }
  if (!p1.poly.has_real_coefficients() || !p2.poly.has_real_coefficients()) {
    throw Error(ErrorCode::IncompatiblePart, "merge: annihilators must have real coefficients");
  }
  require_t(p1.poly, "merge");
  require_t(p2.poly, "merge");
  const int n = p1.space().n();
  const VarSpace complex = VarSpace::complex(n);
  const Var t = Var::t();
  if (slice && slice->size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DimensionMismatch, "merge: slice needs " + std::to_string(n) + " coordinates");
  }
  for (const auto& c : slice.value_or(std::vector<GaussianRational>{})) {
    if (!c.is_real()) throw Error(ErrorCode::InvalidArgument, "merge: slice coordinates must be real");
  }

  std::vector<std::string> log{"input P1 = " + brief(p1.poly), "input P2 = " + brief(p2.poly)};
  const auto candidates = slice ? std::vector<std::vector<GaussianRational>>{*slice} : slice_candidates(n);
  std::vector<std::string> rejected;
  std::optional<std::pair<MultiPoly, MultiPoly>> chosen;
  std::vector<GaussianRational> y0;
  for (const auto& cand : candidates) {
    Bindings b;
    for (int k = 1; k <= n; ++k) {
      b.emplace(Var::x(k), var(complex, Var::z(k)));
      b.emplace(Var::y(k), cst(complex, cand[static_cast<std::size_t>(k - 1)]));
    }
    MultiPoly q1 = substitute(p1.poly, b, complex);
    b.emplace(t, cst(complex, GaussianRational(0, -1)) * var(complex, t));
    MultiPoly q2 = substitute(p2.poly, b, complex);
    if (q1.is_zero() || q2.is_zero() || deg_in(q1, t) == 0 || deg_in(q2, t) == 0) {
      rejected.push_back("y0 = " + render_tuple(cand) + ": Q1 = " + brief(q1) + ", Q2 = " + brief(q2));
      continue;
    }
    chosen.emplace(std::move(q1), std::move(q2));
    y0 = cand;
    break;
  }
  if (!chosen) {
    std::string msg = "merge: no valid slice y = y0 among " + std::to_string(candidates.size()) + " candidates";
    for (const auto& r : rejected) msg += "; " + r;
    throw Error(ErrorCode::SliceExhausted, msg);
  }
  for (const auto& r : rejected) log.push_back("slice rejected, " + r);
  log.push_back("slice y0 = " + render_tuple(y0));
  log.push_back("Q1(z, t) = P1(z, y0, t) = " + brief(chosen->first));
  log.push_back("Q2(z, t) = P2(z, y0, -i t) = " + brief(chosen->second));

  const VarSpace elim = complex.with_w();
  const MultiPoly a = substitute(chosen->first, {{t, var(elim, Var::w())}}, elim);
  const MultiPoly b = substitute(chosen->second, {{t, var(elim, t) - var(elim, Var::w())}}, elim);
  EliminationResult er = resultant_wrt(a, b, Var::w());
  for (auto& s : er.steps) log.push_back("elimination: " + s);
  std::set<CertFlag> flags{CertFlag::RequiresVerification};
  if (er.reduced) flags.insert(CertFlag::Reduced);
  MultiPoly r = reembed(er.resultant, complex);
  log.push_back("resultant of Q1(z, w), Q2(z, t - w) in w: R = " + brief(r));

  if (!is_zero_vector(y0)) {
    // R(x, f(x + i y0)) = 0 on the slice, so R(z - i y0, t) annihilates f.
    Bindings back;
    for (int k = 1; k <= n; ++k) {
      const GaussianRational offset(0, y0[static_cast<std::size_t>(k - 1)].re());
      back.emplace(Var::z(k), var(complex, Var::z(k)) - cst(complex, offset));
    }
    r = substitute(r, back, complex);
    log.push_back("move slice to the real axis, z -> z - i y0: " + brief(r));
  }
  AnnihilatorCertificate cert = make_certificate(r, FunctionPart::F, std::move(log), std::move(flags));
  cert.derivation.push_back("normalize: " + brief(cert.poly));
  return cert;
}

}  // namespace nashcert
