#pragma once

#include <cmath>
#include <cstdint>

#include <gmpxx.h>

#include "rootradii/mag.hpp"

namespace rootradii {

// Double mantissa with a 64-bit exponent: m * 2^e, |m| in [0.5, 1) or m == 0.
// Arithmetic is round-to-nearest on the mantissa; every operation reports
// its exact rounding error (TwoSum / FMA) so balls stay rigorous.
struct XFloat {
  double m = 0.0;
  std::int64_t e = 0;

  static XFloat from_double(double x) { return normalized(x, 0); }

  static XFloat normalized(double x, std::int64_t e) {
    if (x == 0.0) return {};
    int k = 0;
    double n = std::frexp(x, &k);
    return {n, e + k};
  }

  bool is_zero() const { return m == 0.0; }
  XFloat operator-() const { return {-m, e}; }
  Mag abs_mag() const { return is_zero() ? Mag() : Mag::from_scaled(m, e); }
};

// Nearest-ish rounding of an integer; err receives a bound on the truncation.
inline XFloat xfloat_from_mpz(const mpz_class& z, Mag& err) {
  if (z == 0) {
    err = Mag();
    return {};
  }
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  // mpz_get_d_2exp truncates to 53 bits: the error is below one ulp.
  err = mpz_sizeinbase(z.get_mpz_t(), 2) <= 53 ? Mag() : Mag::pow2(exp - 53);
  return XFloat::normalized(d, exp);
}

inline XFloat xmul(const XFloat& a, const XFloat& b, Mag& err) {
  if (a.is_zero() || b.is_zero()) {
    err = Mag();
    return {};
  }
  double p = a.m * b.m;
  double r = std::fma(a.m, b.m, -p);
  err = Mag::from_scaled(r, a.e + b.e);
  return XFloat::normalized(p, a.e + b.e);
}

inline XFloat xadd(const XFloat& a, const XFloat& b, Mag& err) {
  if (b.is_zero()) {
    err = Mag();
    return a;
  }
  if (a.is_zero()) {
    err = Mag();
    return b;
  }
  const XFloat& hi = a.e >= b.e ? a : b;
  const XFloat& lo = a.e >= b.e ? b : a;
  const std::int64_t diff = hi.e - lo.e;
  if (diff > 100) {
    err = lo.abs_mag();
    return hi;
  }
  double x = hi.m;
  double y = std::ldexp(lo.m, -static_cast<int>(diff));
  double s = x + y;
  double bb = s - x;
  double r = (x - (s - bb)) + (y - bb);
  err = Mag::from_scaled(r, hi.e);
  return XFloat::normalized(s, hi.e);
}

// Real ball with an XFloat midpoint: fast path for 53-bit working precision.
struct XBall {
  XFloat mid;
  Mag rad;

  static constexpr long kPrecision = 53;

  static XBall zero(long = kPrecision) { return {}; }
  static XBall from_mpz(const mpz_class& z, long = kPrecision) {
    XBall b;
    b.mid = xfloat_from_mpz(z, b.rad);
    return b;
  }
  // z * 2^e.
  static XBall from_mpz_2exp(const mpz_class& z, std::int64_t e, long = kPrecision) {
    XBall b = from_mpz(z);
    return b.mul_2exp(e);
  }
  static XBall from_double(double x, long = kPrecision) { return {XFloat::from_double(x), Mag()}; }

  long precision() const { return kPrecision; }
  XBall operator-() const { return {-mid, rad}; }

  friend XBall operator+(const XBall& a, const XBall& b) {
    Mag err;
    XBall r;
    r.mid = xadd(a.mid, b.mid, err);
    r.rad = add_up(add_up(a.rad, b.rad), err);
    return r;
  }

  friend XBall operator-(const XBall& a, const XBall& b) { return a + (-b); }

  friend XBall operator*(const XBall& a, const XBall& b) {
    Mag err;
    XBall r;
    r.mid = xmul(a.mid, b.mid, err);
    Mag rad = err;
    if (!b.rad.is_zero()) rad = add_up(rad, mul_up(a.mid.abs_mag(), b.rad));
    if (!a.rad.is_zero()) {
      rad = add_up(rad, mul_up(b.mid.abs_mag(), a.rad));
      if (!b.rad.is_zero()) rad = add_up(rad, mul_up(a.rad, b.rad));
    }
    r.rad = rad;
    return r;
  }

  const Mag& radius() const { return rad; }

  XBall& operator+=(const XBall& o) { return *this = *this + o; }
  XBall& operator-=(const XBall& o) { return *this = *this - o; }
  XBall& operator*=(const XBall& o) { return *this = *this * o; }

  XBall mul_2exp(std::int64_t k) const {
    XBall r = *this;
    if (!r.mid.is_zero()) r.mid.e += k;
    r.rad = r.rad.mul_2exp(k);
    return r;
  }

  Mag abs_upper() const { return add_up(mid.abs_mag(), rad); }
  Mag abs_lower() const { return sub_down(mid.abs_mag(), rad); }
  bool contains_zero() const { return abs_lower().is_zero(); }
  // Sign of every point in the ball: +1, -1, or 0 when the ball touches 0.
  int sign() const {
    if (contains_zero()) return 0;
    return mid.m > 0 ? 1 : -1;
  }
  double mid_double() const { return mid.is_zero() ? 0.0 : std::ldexp(mid.m, static_cast<int>(mid.e)); }
};

inline XBall sqr(const XBall& a) { return a * a; }

}  // namespace rootradii
