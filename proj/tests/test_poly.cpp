#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "rootradii/ball_polynomial.hpp"
#include "rootradii/int_polynomial.hpp"
#include "support/checks.hpp"

using namespace rootradii;
using checks::from_roots;
using checks::graeffe_convolution;
using checks::to_mpq;

namespace {

// Midpoints of a ball polynomial as exact integers (requires zero radii and integral midpoints).
std::vector<mpz_class> exact_mids(const BallPolynomial<MpBall>& p) {
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs) {
    mpz_class z;
    EXPECT_TRUE(mpfr_integer_p(c.mid()));
    mpfr_get_z(z.get_mpz_t(), c.mid(), MPFR_RNDN);
    out.push_back(z);
  }
  return out;
}

}  // namespace

TEST(TaylorShift, IdentityShift) {
  IntPolynomial p{2, -3, 1};
  EXPECT_EQ(taylor_shift(p, GaussInt(0)), p);
}

TEST(TaylorShift, ShiftByOne) { EXPECT_EQ(taylor_shift(IntPolynomial{2, -3, 1}, GaussInt(1)), (IntPolynomial{0, -1, 1})); }

TEST(TaylorShift, ShiftByI) {
  // (x + i) - 1 = x - (1 - i)
  IntPolynomial expect(std::vector<GaussInt>{GaussInt(-1, 1), GaussInt(1)});
  EXPECT_EQ(taylor_shift(IntPolynomial{-1, 1}, GaussInt::i()), expect);
}

TEST(TaylorShift, CompositionIsIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + rng() % 32;
    std::vector<GaussInt> c(d + 1);
    for (auto& g : c) {
      mpz_class re = static_cast<long>(rng() >> 1), im = static_cast<long>(rng() >> 1);
      if (rng() & 1) re = -re;
      if (trial % 2) im = 0;
      g = GaussInt(re, im);
    }
    IntPolynomial p(c);
    GaussInt s(static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 17) - 8);
    EXPECT_EQ(taylor_shift(taylor_shift(p, s), -s), p);
  }
}

TEST(TaylorShift, ScaledShiftMatchesScaledPolynomial) {
  // P(c + r x) with c = 3/2, r = 1/4 for P = x^2 - 3x + 2 is (1/16)x^2 - (1/4)... times 16 -> x^2 + 0x - 4? check numerically
  IntPolynomial p{2, -3, 1};
  ScaledShift s = shift_scale(p, Dyadic(mpz_class(3), -1), Dyadic(), Dyadic(mpz_class(1), -2));
  // P(3/2 + x/4) = x^2/16 - 1/4; scaled by 2^(2*2) = 16: x^2 - 4.
  ASSERT_TRUE(s.is_real());
  EXPECT_EQ(s.re[0], -4);
  EXPECT_EQ(s.re[1], 0);
  EXPECT_EQ(s.re[2], 1);
}

TEST(Graeffe, QuadraticExample) {
  auto g = graeffe_step(to_real_balls<MpBall>(IntPolynomial{2, -3, 1}, 128));
  EXPECT_EQ(exact_mids(g), (std::vector<mpz_class>{4, -5, 1}));
}

TEST(Graeffe, LinearExample) {
  auto g = graeffe_step(to_real_balls<MpBall>(IntPolynomial{-3, 1}, 128));
  EXPECT_EQ(exact_mids(g), (std::vector<mpz_class>{-9, 1}));
}

TEST(Graeffe, ConjugatePairSquaresToDoubleRoot) {
  auto g = graeffe_step(to_real_balls<MpBall>(IntPolynomial{1, 0, 1}, 128));
  EXPECT_EQ(exact_mids(g), (std::vector<mpz_class>{1, 2, 1}));
}

TEST(Graeffe, IterateExamples) {
  auto p = to_real_balls<MpBall>(IntPolynomial{2, -3, 1}, 128);
  EXPECT_EQ(exact_mids(graeffe_iterate(p, 0)), (std::vector<mpz_class>{2, -3, 1}));
  EXPECT_EQ(exact_mids(graeffe_iterate(p, 2)), (std::vector<mpz_class>{16, -17, 1}));
  EXPECT_EQ(exact_mids(graeffe_iterate(to_real_balls<MpBall>(IntPolynomial{-2, 1}, 128), 3)),
            (std::vector<mpz_class>{-256, 1}));
}

TEST(Graeffe, RootSquaredExpansionExact) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng() % 8;
    const long lc = 1 + static_cast<long>(rng() % 5);
    std::vector<long> roots, squares;
    for (std::size_t k = 0; k < d; ++k) {
      long r = static_cast<long>(rng() % 21) - 10;
      roots.push_back(r);
      squares.push_back(r * r);
    }
    IntPolynomial p = from_roots(lc, roots), expect = from_roots(lc * lc, squares);
    auto g = graeffe_step(to_real_balls<MpBall>(p, 256));
    std::vector<mpz_class> want;
    for (std::size_t j = 0; j < g.size(); ++j) {
      want.push_back(j < expect.size() ? expect[j].re : mpz_class(0));
      EXPECT_TRUE(g[j].rad().is_zero());
    }
    EXPECT_EQ(exact_mids(g), want);
    // The fast 53-bit ball must enclose the same values.
    auto gx = graeffe_step(to_real_balls<XBall>(p, 53));
    for (std::size_t j = 0; j < gx.size(); ++j) {
      MpBall w = MpBall::from_mpz(want[j], 512);
      MpBall m = MpBall::from_double(gx[j].mid_double(), 512);
      EXPECT_LE((w - m).abs_upper(), gx[j].rad);
    }
  }
}

TEST(Graeffe, MatchesConvolutionFormula) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng() % 12;
    BallPolynomial<MpBall> p;
    std::vector<mpq_class> a;
    for (std::size_t j = 0; j <= d; ++j) {
      long m = static_cast<long>(rng() % 2001) - 1000;
      int e = static_cast<int>(rng() % 21) - 10;
      MpBall b = MpBall::from_mpz_2exp(mpz_class(m), e, 512);
      p.coeffs.push_back(b);
      a.push_back(to_mpq(b));
    }
    auto g = graeffe_step(p);
    auto want = graeffe_convolution(a);
    for (std::size_t j = 0; j <= d; ++j) EXPECT_EQ(to_mpq(g[j]), want[j]) << "j=" << j;
  }
}

TEST(EvalBall, Examples) {
  auto p = to_real_balls<MpBall>(IntPolynomial{2, -3, 1}, 128);
  EXPECT_EQ(eval_ball(p, MpBall::zero(128)).mid_double(), 2.0);
  MpBall v = eval_ball(p, MpBall::from_double(1.5, 128));
  EXPECT_TRUE((v - MpBall::from_double(-0.25, 128)).contains_zero());
  auto q = to_real_balls<XBall>(IntPolynomial{-1, 1}, 53);
  EXPECT_TRUE(eval_ball(q, XBall::from_double(1.0)).contains_zero());
}

TEST(EvalBall, ContainsZeroAtRationalRoots) {
  // (2x - 1)(3x + 2)(x - 5) at x = 1/2 and x = 5, both exactly representable.
  IntPolynomial p = IntPolynomial{-1, 2} * IntPolynomial{2, 3} * IntPolynomial{-5, 1};
  auto b = to_real_balls<MpBall>(p, 64);
  EXPECT_TRUE(eval_ball(b, MpBall::from_double(0.5, 64)).contains_zero());
  EXPECT_TRUE(eval_ball(b, MpBall::from_double(5.0, 64)).contains_zero());
  EXPECT_FALSE(eval_ball(b, MpBall::from_double(1.0, 64)).contains_zero());
  auto c = to_complex_balls<XBall>(IntPolynomial{1, 0, 1}, 53);
  EXPECT_TRUE(eval_ball(c, XCBall{XBall::zero(), XBall::from_double(1.0)}).contains_zero());
}

TEST(Fujiwara, Examples) {
  Dyadic r = fujiwara_bound(IntPolynomial{2, -3, 1});
  EXPECT_GE(r, Dyadic(2));
  EXPECT_GE(r, Dyadic(6));
  EXPECT_LE(r.to_double(), 6.0 + 1e-12);
  EXPECT_EQ(fujiwara_bound(IntPolynomial::monomial(5)), Dyadic(1));
  IntPolynomial w = from_roots(1, {1, 2, 3, 4});
  EXPECT_GE(fujiwara_bound(w), Dyadic(4));
}

TEST(IntPolynomial, BitsizeAndDerivative) {
  EXPECT_EQ((IntPolynomial{2, -3, 1}).bitsize(), 2);
  EXPECT_EQ((IntPolynomial{1, 1}).bitsize(), 0);
  EXPECT_EQ((IntPolynomial{4, 1}).bitsize(), 2);
  EXPECT_EQ((IntPolynomial{5, 1}).bitsize(), 3);
  EXPECT_EQ((IntPolynomial{2, -3, 1}).derivative(), (IntPolynomial{-3, 2}));
  EXPECT_EQ((IntPolynomial{0, 0, 3}).trailing_zeros(), 2u);
}
