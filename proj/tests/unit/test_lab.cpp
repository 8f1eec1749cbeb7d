#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "nashcert/certificates.hpp"
#include "nashcert/error.hpp"
#include "nashcert/kernels.hpp"
#include "nashcert/lab.hpp"
#include "nashcert/poly_text.hpp"

namespace nashcert {
namespace {

using C = std::complex<double>;

AnnihilatorCertificate holo(const std::string& s) {
  return make_certificate(parse_poly(s, VarSpace::complex(1)), FunctionPart::F);
}

const SampleRegion kDisc = SampleRegion::polydisc({0.0}, 0.5);

TEST(Sampling, CountZeroIsEmpty) { EXPECT_TRUE(sample_points(kDisc, 0, 1, parse_expr("z1")).empty()); }

TEST(Sampling, DeterministicAndInside) {
  const ExprAST e = parse_expr("sqrt(1 + z1^2)");
  const auto a = sample_points(kDisc, 200, 42, e);
  const auto b = sample_points(kDisc, 200, 42, e);
  ASSERT_EQ(a.size(), 200u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].coords, b[k].coords);
    EXPECT_LT(std::abs(a[k].coords[0]), 0.5);
    EXPECT_GT(std::abs(a[k].coords[0] - C(0, 1)), kDisc.delta);
    EXPECT_GT(std::abs(a[k].coords[0] + C(0, 1)), kDisc.delta);
  }
  EXPECT_NE(sample_points(kDisc, 200, 43, e)[0].coords, a[0].coords);
}

TEST(Sampling, DefaultDeltaScalesWithRadius) {
  EXPECT_DOUBLE_EQ(SampleRegion::polydisc({0.0}, 2.0).delta, 2e-3);
}

TEST(Sampling, HostileRegion) {
  // Every point of this disc sits on the cut of sqrt(z1).
  const SampleRegion r{{C(-1.0, 0.0)}, 1e-6, 1e-3};
  try {
    (void)sample_points(r, 50, 1, parse_expr("sqrt(z1)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RegionTooHostile);
  }
}

TEST(Sampling, RejectsPointsNearPoles) {
  const SampleRegion r = SampleRegion::polydisc({C(-1.0, 0.0)}, 0.5);
  const ExprAST e = parse_expr("1/(1 + z1)");
  for (const auto& p : sample_points(r, 100, 3, e)) EXPECT_GE(std::abs(p.coords[0] + 1.0), r.delta);
}

TEST(Verify, Examples) {
  const auto r = verify_certificate(holo("t - z1"), parse_expr("z1"), kDisc, 200, 1e-8, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.max_relative_residual, 0.0);
  EXPECT_EQ(r.points_checked, 200u);
  EXPECT_EQ(r.requested, 200u);

  const auto s = verify_certificate(holo("t^2 - z1^2 - 1"), parse_expr("sqrt(1+z1^2)"), kDisc, 200, 1e-8, 1);
  EXPECT_TRUE(s.pass);
  EXPECT_LE(s.max_relative_residual, 1e-12);

  const auto c = verify_certificate(holo("t - z1"), parse_expr("conj(z1)"), kDisc, 200, 1e-8, 1);
  EXPECT_FALSE(c.pass);
  EXPECT_GE(c.max_relative_residual, 1e-1);
  ASSERT_EQ(c.worst_point.size(), 1u);
}

TEST(Verify, RealAndImaginaryParts) {
  const SampleRegion r = kDisc;
  const auto re = make_certificate(parse_poly("t - x1^2 + y1^2"), FunctionPart::RealPart);
  const auto im = make_certificate(parse_poly("t - 2*x1*y1"), FunctionPart::ImagPart);
  EXPECT_TRUE(verify_certificate(re, parse_expr("z1^2"), r, 100, 1e-12, 5).pass);
  EXPECT_TRUE(verify_certificate(im, parse_expr("z1^2"), r, 100, 1e-12, 5).pass);
  EXPECT_FALSE(verify_certificate(im, parse_expr("z1^2 + i"), r, 100, 1e-8, 5).pass);
}

TEST(Verify, Preconditions) {
  auto code = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code([] { (void)verify_certificate(holo("t - z1"), parse_expr("z1 + z2"), kDisc, 10, 1e-8, 1); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code([] {
              (void)verify_certificate(holo("t - z1"), parse_expr("z1"), SampleRegion::polydisc({0.0, 0.0}, 0.5), 10,
                                       1e-8, 1);
            }),
            ErrorCode::DimensionMismatch);
}

TEST(Verify, BitIdenticalAcrossRuns) {
  const auto c = holo("t^2 - z1^2 - z1^4");
  const ExprAST e = parse_expr("z1*sqrt(1 + z1^2)");
  const auto a = verify_certificate(c, e, kDisc, 200, 1e-8, 9);
  const auto b = verify_certificate(c, e, kDisc, 200, 1e-8, 9);
  EXPECT_EQ(a.max_relative_residual, b.max_relative_residual);
  EXPECT_EQ(a.worst_point, b.worst_point);
}

TEST(Verify, SerialAndParallelPoliciesAgree) {
  const auto c = split_complex(holo("t^2 - z1^2 - 1")).real_part;
  const ExprAST e = parse_expr("sqrt(1 + z1^2)");
  const auto a = verify_certificate(c, e, kDisc, 500, 1e-8, 4, ExecutionPolicy::Serial);
  const auto b = verify_certificate(c, e, kDisc, 500, 1e-8, 4, ExecutionPolicy::Parallel);
  EXPECT_EQ(a.max_relative_residual, b.max_relative_residual);
  EXPECT_EQ(a.worst_point, b.worst_point);
  EXPECT_EQ(a.pass, b.pass);
}

TEST(Kernels, CompiledMatchesEvalPoly) {
  std::mt19937_64 rng(31);
  const VarSpace s = VarSpace::conjugate_pair(2).with_w();
  for (int k = 0; k < 100; ++k) {
    const MultiPoly p = testing::random_poly(rng, s, 8, 4);
    const auto pt = testing::random_slots(rng, s);
    const EvalResult a = eval_poly(p, pt);
    const EvalResult b = CompiledPoly(p).evaluate(pt);
    EXPECT_LE(std::abs(a.value - b.value), 1e-12 * (1.0 + a.magnitude)) << k;
    EXPECT_NEAR(a.magnitude, b.magnitude, 1e-12 * (1.0 + a.magnitude)) << k;
  }
}

TEST(Kernels, ParallelIsBitIdenticalToSerial) {
  std::mt19937_64 rng(37);
  const VarSpace s = VarSpace::real(2);
  const CompiledPoly p(testing::random_poly(rng, s, 12, 5));
  std::vector<std::vector<C>> batch;
  for (int k = 0; k < 4096; ++k) batch.push_back(testing::random_slots(rng, s));
  const auto a = batch_residuals_serial(p, batch);
  const auto b = batch_residuals_parallel(p, batch);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) ASSERT_EQ(a[k], b[k]) << k;
}

TEST(Kernels, ResidualSummaryPicksFirstWorst) {
  const std::vector<double> r{0.1, 0.5, 0.2, 0.5};
  const auto s = summarize_residuals(r);
  EXPECT_EQ(s.max, 0.5);
  EXPECT_EQ(s.worst_index, 1u);
  EXPECT_EQ(relative_residual({C(NAN, 0), 1.0}), std::numeric_limits<double>::infinity());
  EXPECT_DOUBLE_EQ(relative_residual({C(3, 4), 4.0}), 1.0);
}

TEST(Kernels, WidthChecked) {
  const CompiledPoly p(parse_poly("t - x1 + y1"));
  const std::vector<std::vector<C>> bad{{1.0, 2.0}};
  EXPECT_THROW((void)batch_residuals_parallel(p, bad), Error);
}

}  // namespace
}  // namespace nashcert
