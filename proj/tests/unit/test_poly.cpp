#include <gtest/gtest.h>

#include "nashcert/error.hpp"
#include "nashcert/multi_poly.hpp"
#include "nashcert/poly_text.hpp"

namespace nashcert {
namespace {

const VarSpace kC1 = VarSpace::complex(1);
const VarSpace kR1 = VarSpace::real(1);
const VarSpace kPair1 = VarSpace::conjugate_pair(1);

MultiPoly P(const std::string& s, const VarSpace& space) { return parse_poly(s, space); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(render_poly(P("t - z1", kC1) + P("z1", kC1)), "t");
  const MultiPoly p = P("t^2 - 3*z1 + 1/2", kC1);
  EXPECT_EQ(p + MultiPoly(kC1), p);
  EXPECT_EQ(render_poly(P("x1^2 + y1^2", kR1) + P("-x1^2", kR1)), "y1^2");
  EXPECT_TRUE((p - p).is_zero());
}

TEST(PolyAdd, SpaceMismatch) {
  EXPECT_EQ(code_of([] { (void)(P("t", kC1) + P("t", kR1)); }), ErrorCode::SpaceMismatch);
  EXPECT_EQ(code_of([] { (void)(P("t", kC1) * P("t", kR1)); }), ErrorCode::SpaceMismatch);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(render_poly(P("t - z1", kC1) * P("t + z1", kC1)), "t^2 - z1^2");
  const MultiPoly p = P("t^2 - 3*z1 + 1/2", kC1);
  EXPECT_EQ(p * MultiPoly::constant(kC1, 1), p);
  EXPECT_EQ(render_poly(P("x1 + i*y1", kR1) * P("x1 - i*y1", kR1)), "x1^2 + y1^2");
  EXPECT_EQ(poly_pow(P("t - z1", kC1), 3), P("t^3 - 3*t^2*z1 + 3*t*z1^2 - z1^3", kC1));
  EXPECT_EQ(poly_pow(P("t - z1", kC1), 0), MultiPoly::constant(kC1, 1));
}

TEST(Substitute, CartanHalving) {
  // (z/(2i))^2 = -z^2/4, so t - z^2/4 - z^2/4.
  const MultiPoly z = MultiPoly::variable(kC1, Var::z(1));
  const Bindings b{{Var::x(1), GaussianRational(mpq_class(1, 2)) * z},
                   {Var::y(1), GaussianRational(mpq_class(0), mpq_class(-1, 2)) * z}};
  const MultiPoly out = substitute(P("t - x1^2 + y1^2", kR1), b, kC1);
  EXPECT_EQ(render_poly(out), "t - 1/2*z1^2");
}

TEST(Substitute, IdentityAndScaling) {
  const MultiPoly p = P("t - x1 + 2*x1*y1^2", kR1);
  Bindings id;
  for (Var v : kR1.variables()) id.emplace(v, MultiPoly::variable(kR1, v));
  EXPECT_EQ(substitute(p, id, kR1), p);
  EXPECT_EQ(render_poly(substitute(P("t - x1", kR1), {{Var::t(), P("2*t", kR1)}}, kR1)), "2*t - x1");
}

TEST(Substitute, Errors) {
  EXPECT_EQ(code_of([] { (void)substitute(P("t - x1", kR1), {{Var::z(1), P("t", kR1)}}, kR1); }),
            ErrorCode::UnknownVariable);
  EXPECT_EQ(code_of([] { (void)substitute(P("t - x1", kR1), {{Var::t(), P("t", kC1)}}, kR1); }),
            ErrorCode::SpaceMismatch);
  // x1 unbound and absent from the result space.
  EXPECT_ANY_THROW((void)substitute(P("t - x1", kR1), {{Var::t(), P("t", kC1)}}, kC1));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate_poly(P("(1+1i)*t*z1", kC1)), P("(1-1i)*t*z1", kC1));
  const MultiPoly real = P("t^2 - 3*z1 + 1/2", kC1);
  EXPECT_EQ(conjugate_poly(real), real);
  EXPECT_EQ(conjugate_poly(P("i", kC1)), P("-i", kC1));
}

TEST(Realify, Examples) {
  EXPECT_EQ(realify(P("i*t*z1 + 2i", kC1)), P("t*z1 + 2", kC1));
  EXPECT_EQ(realify(P("i*z1 + t", kC1)), P("t^2 + z1^2", kC1));
  EXPECT_EQ(realify(P("4*t - 8*z1", kC1)), P("t - 2*z1", kC1));
  EXPECT_EQ(code_of([] { (void)realify(MultiPoly(kC1)); }), ErrorCode::ZeroInput);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(P("z1*zb1", kPair1)), P("x1^2 + y1^2", kR1));
  EXPECT_EQ(phi(P("t - z1 - zb1", kPair1)), P("t - 2*x1", kR1));
  EXPECT_EQ(phi(P("z1^2 - zb1^2", kPair1)), P("4i*x1*y1", kR1));
  EXPECT_EQ(code_of([] { (void)phi(P("t - x1", kR1)); }), ErrorCode::UnknownVariable);
}

TEST(PhiInverse, Examples) {
  EXPECT_EQ(phi_inverse(P("x1", kR1)), P("1/2*z1 + 1/2*zb1", kPair1));
  EXPECT_EQ(phi_inverse(P("x1^2 + y1^2", kR1)), P("z1*zb1", kPair1));
  EXPECT_EQ(phi_inverse(P("t", kR1)), P("t", kPair1));
}

TEST(ContentNormalize, Examples) {
  EXPECT_EQ(content_normalize(P("-2i*t + 2i*y1", kR1)), P("t - y1", kR1));
  EXPECT_EQ(content_normalize(P("4*t - 8*x1", kR1)), P("t - 2*x1", kR1));
  const MultiPoly n = P("t - 2*x1", kR1);
  EXPECT_EQ(content_normalize(n), n);
  EXPECT_EQ(content_normalize(P("1/2*t + 1/3", kR1)), P("3*t + 2", kR1));
  EXPECT_EQ(code_of([] { (void)content_normalize(MultiPoly(kR1)); }), ErrorCode::ZeroInput);
}

TEST(ContentNormalize, GaussianIntegerContent) {
  // Content is 2; no unit makes 1+i real, so it stays in the first quadrant.
  EXPECT_EQ(content_normalize(P("(2+2i)*t + 2i*z1", kC1)), P("(1+1i)*t + i*z1", kC1));
  EXPECT_EQ(content_normalize(P("(-2+2i)*t + 2*z1", kC1)), P("(1+1i)*t - i*z1", kC1));
}

TEST(Eval, ValueAndMagnitude) {
  const MultiPoly p = P("t - 2*x1*y1 + 3", kR1);
  const std::map<Var, std::complex<double>> pt{{Var::t(), 1.0}, {Var::x(1), 2.0}, {Var::y(1), -1.0}};
  const EvalResult r = eval_poly(p, pt);
  EXPECT_DOUBLE_EQ(r.value.real(), 8.0);
  EXPECT_DOUBLE_EQ(r.value.imag(), 0.0);
  EXPECT_DOUBLE_EQ(r.magnitude, 1.0 + 4.0 + 3.0);
  EXPECT_ANY_THROW((void)eval_poly(p, std::map<Var, std::complex<double>>{{Var::t(), 1.0}}));
}

TEST(Degrees, Basic) {
  const MultiPoly p = P("t^3*z1 - z1^4 + 1", kC1);
  EXPECT_EQ(deg_in(p, Var::t()), 3u);
  EXPECT_EQ(deg_in(p, Var::z(1)), 4u);
  EXPECT_EQ(total_degree(p), 4u);
  EXPECT_TRUE(p.uses(Var::t()));
  EXPECT_FALSE(P("z1", kC1).uses(Var::t()));
}

TEST(DivideExact, QuotientsAndRemainders) {
  const MultiPoly a = P("t^2 - z1^2", kC1);
  const auto q = divide_exact(a, P("t - z1", kC1));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("t + z1", kC1));
  EXPECT_FALSE(divide_exact(a, P("t - 2*z1", kC1)));
  EXPECT_EQ(code_of([&] { (void)divide_exact(a, MultiPoly(kC1)); }), ErrorCode::ZeroInput);
}

TEST(CoefficientsIn, Reassembles) {
  const MultiPoly p = P("t^2*z1 - 3*t + z1^2 + 1", kC1);
  const auto c = coefficients_in(p, Var::t());
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], P("z1^2 + 1", kC1));
  EXPECT_EQ(c[1], P("-3", kC1));
  EXPECT_EQ(c[2], P("z1", kC1));
}

TEST(Reembed, MovesByIdentity) {
  const MultiPoly p = P("t - z1", kC1);
  const MultiPoly q = reembed(p, VarSpace::conjugate_pair(2).with_w());
  EXPECT_EQ(render_poly(q), "t - z1");
  EXPECT_EQ(reembed(q, kC1), p);
  EXPECT_ANY_THROW((void)reembed(p, kR1));
}

}  // namespace
}  // namespace nashcert
