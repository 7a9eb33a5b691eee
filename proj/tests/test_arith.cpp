#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "rootradii/cball.hpp"
#include "rootradii/dyadic.hpp"
#include "rootradii/interval.hpp"
#include "rootradii/mag.hpp"

using namespace rootradii;

TEST(Mag, RoundingDirections) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  for (int i = 0; i < 2000; ++i) {
    double a = u(rng), b = u(rng);
    Mag ma = Mag::from_double(a), mb = Mag::from_double(b);
    long double la = a, lb = b;
    EXPECT_GE(static_cast<long double>(add_up(ma, mb).to_double()), la + lb);
    EXPECT_LE(static_cast<long double>(add_down(ma, mb).to_double()), la + lb);
    EXPECT_GE(static_cast<long double>(mul_up(ma, mb).to_double()), la * lb);
    EXPECT_LE(static_cast<long double>(mul_down(ma, mb).to_double()), la * lb);
    long double diff = la > lb ? la - lb : 0.0L;
    EXPECT_LE(static_cast<long double>(sub_down(ma, mb).to_double()), diff);
    double su = sqrt_up(ma).to_double(), sd = sqrt_down(ma).to_double();
    EXPECT_GE(static_cast<long double>(su) * su, la);
    EXPECT_LE(static_cast<long double>(sd) * sd, la);
  }
}

TEST(Mag, ExtremeExponentsCompare) {
  Mag big = Mag::pow2(1'000'000), small = Mag::pow2(-1'000'000);
  EXPECT_LT(small, big);
  EXPECT_EQ(add_up(big, small) > big, true);
  EXPECT_EQ(add_down(big, small), big);
  EXPECT_DOUBLE_EQ(big.log2(), 1'000'000.0);
}

TEST(XBall, ProductEnclosesExact) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    mpz_class a = static_cast<long>(rng() >> 2), b = static_cast<long>(rng() >> 3);
    a *= a;
    b = b * b * b;
    XBall x = XBall::from_mpz(a), y = XBall::from_mpz(b);
    XBall p = x * y, s = x - y;
    mpz_class ep = a * b, es = a - b;
    MpBall ref = MpBall::from_mpz(ep, 512), refs = MpBall::from_mpz(es, 512);
    MpBall mid = MpBall::from_mpz_2exp(mpz_class(static_cast<long>(std::ldexp(p.mid.m, 53))), p.mid.e - 53, 512);
    EXPECT_LE((ref - mid).abs_upper(), p.rad);
    MpBall mids = MpBall::from_mpz_2exp(mpz_class(static_cast<long>(std::ldexp(s.mid.m, 53))), s.mid.e - 53, 512);
    EXPECT_LE((refs - mids).abs_upper(), s.rad);
  }
}

TEST(MpBall, RoundingTracked) {
  MpBall third = MpBall::from_mpz(mpz_class(1), 64);
  MpBall three = MpBall::from_mpz(mpz_class(3), 64);
  MpBall x = third;
  for (int i = 0; i < 60; ++i) x = x * three;
  mpz_class exact;
  mpz_ui_pow_ui(exact.get_mpz_t(), 3, 60);
  MpBall e = MpBall::from_mpz(exact, 1024);
  EXPECT_TRUE((x - e).contains_zero());
  EXPECT_EQ(MpBall::from_mpz(mpz_class(-5), 53).sign(), -1);
}

TEST(CBall, ModulusBounds) {
  CBall<MpBall> z = CBall<MpBall>::from_mpz(3, 4, 64);
  EXPECT_LE(z.abs_lower().to_double(), 5.0);
  EXPECT_GE(z.abs_upper().to_double(), 5.0);
  auto w = sqr(z);  // -7 + 24i
  EXPECT_EQ(w.re.mid_double(), -7.0);
  EXPECT_EQ(w.im.mid_double(), 24.0);
}

TEST(Dyadic, NormalizationAndPrinting) {
  Dyadic a(mpz_class(12), -4);  // 3/4
  EXPECT_EQ(a.mantissa(), 3);
  EXPECT_EQ(a.exponent(), -2);
  EXPECT_EQ(a.str(), "3/4");
  EXPECT_EQ((a + Dyadic(1)).str(), "7/4");
  EXPECT_EQ((a * a).str(), "9/16");
  EXPECT_LT(a, Dyadic(1));
  EXPECT_EQ(Dyadic::from_double(0.375), Dyadic(mpz_class(3), -3));
  EXPECT_EQ(Dyadic(-8).str(), "-8");
}

TEST(Interval, OutwardRounding) {
  Interval a = Interval::from_dyadic(Dyadic(mpz_class(1), -1));
  Interval t = Interval::point(0.1) * Interval::point(3.0);
  EXPECT_TRUE(t.contains(0.1 * 3.0));
  EXPECT_TRUE(a.contains(0.5));
  Interval s = sqrt(Interval::point(2.0));
  EXPECT_LE(s.lo * s.lo, 2.0);
  EXPECT_GE(s.hi * s.hi, 2.0);
  EXPECT_TRUE(may_intersect({0, 1}, {1, 2}));
  EXPECT_FALSE(may_intersect({0, 1}, {1.5, 2}));
  EXPECT_TRUE(certainly_subset({0.5, 0.7}, {0, 1}));
}
