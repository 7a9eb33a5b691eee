#pragma once

#include <cstdint>

#include "rootradii/mag.hpp"
#include "rootradii/mpball.hpp"
#include "rootradii/xball.hpp"

namespace rootradii {

// Rectangular complex ball: a product of two real balls.
template <class B>
struct CBall {
  B re;
  B im;

  static CBall zero(long prec) { return {B::zero(prec), B::zero(prec)}; }
  static CBall from_mpz(const mpz_class& r, const mpz_class& i, long prec) {
    return {B::from_mpz(r, prec), B::from_mpz(i, prec)};
  }

  long precision() const { return re.precision(); }
  CBall operator-() const { return {-re, -im}; }

  friend CBall operator+(const CBall& a, const CBall& b) { return {a.re + b.re, a.im + b.im}; }
  friend CBall operator-(const CBall& a, const CBall& b) { return {a.re - b.re, a.im - b.im}; }
  friend CBall operator*(const CBall& a, const CBall& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CBall operator*(const CBall& a, const B& b) { return {a.re * b, a.im * b}; }

  CBall& operator+=(const CBall& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CBall& operator-=(const CBall& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CBall& operator*=(const CBall& o) { return *this = *this * o; }

  CBall mul_2exp(std::int64_t k) const { return {re.mul_2exp(k), im.mul_2exp(k)}; }

  Mag abs_upper() const {
    Mag a = re.abs_upper(), b = im.abs_upper();
    return sqrt_up(add_up(mul_up(a, a), mul_up(b, b)));
  }
  Mag abs_lower() const {
    Mag a = re.abs_lower(), b = im.abs_lower();
    return sqrt_down(add_down(mul_down(a, a), mul_down(b, b)));
  }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

template <class B>
CBall<B> sqr(const CBall<B>& a) {
  B ri = a.re * a.im;
  return {sqr(a.re) - sqr(a.im), ri.mul_2exp(1)};
}

using XCBall = CBall<XBall>;
using MpCBall = CBall<MpBall>;

}  // namespace rootradii
