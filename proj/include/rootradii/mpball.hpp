#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "rootradii/mag.hpp"

namespace rootradii {

namespace detail {

// Widest exponent range, set once per thread (MPFR keeps it thread-local).
inline void ensure_mpfr_range() {
  thread_local bool done = [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    return true;
  }();
  (void)done;
}

inline Mag mag_upper(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Mag();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x, MPFR_RNDA);
  return Mag::from_scaled(d, e);
}

inline Mag mag_lower(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Mag();
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x, MPFR_RNDZ);
  return Mag::from_scaled(d, e);
}

// Bound on the rounding error of a result r computed with ternary value t.
inline Mag rounding_error(const mpfr_t r, int t) {
  if (t == 0 || mpfr_zero_p(r)) return Mag();
  return Mag::pow2(static_cast<std::int64_t>(mpfr_get_exp(r)) - static_cast<std::int64_t>(mpfr_get_prec(r)));
}

}  // namespace detail

// Real ball with an MPFR midpoint of a given precision and a Mag radius.
class MpBall {
 public:
  MpBall() : MpBall(53) {}
  explicit MpBall(long prec) {
    detail::ensure_mpfr_range();
    mpfr_init2(mid_, prec);
    mpfr_set_zero(mid_, 1);
  }
  MpBall(const MpBall& o) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    rad_ = o.rad_;
  }
  MpBall(MpBall&& o) noexcept : rad_(o.rad_) {
    *mid_ = *o.mid_;
    o.mid_->_mpfr_d = nullptr;
  }
  MpBall& operator=(const MpBall& o) {
    if (this != &o) {
      mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
      mpfr_set(mid_, o.mid_, MPFR_RNDN);
      rad_ = o.rad_;
    }
    return *this;
  }
  MpBall& operator=(MpBall&& o) noexcept {
    std::swap(*mid_, *o.mid_);
    rad_ = o.rad_;
    return *this;
  }
  ~MpBall() {
    if (mid_->_mpfr_d != nullptr) mpfr_clear(mid_);
  }

  static MpBall zero(long prec) { return MpBall(prec); }

  static MpBall from_mpz(const mpz_class& z, long prec) {
    MpBall b(prec);
    int t = mpfr_set_z(b.mid_, z.get_mpz_t(), MPFR_RNDN);
    b.rad_ = detail::rounding_error(b.mid_, t);
    return b;
  }

  // z * 2^e.
  static MpBall from_mpz_2exp(const mpz_class& z, std::int64_t e, long prec) {
    MpBall b(prec);
    int t = mpfr_set_z_2exp(b.mid_, z.get_mpz_t(), e, MPFR_RNDN);
    b.rad_ = detail::rounding_error(b.mid_, t);
    return b;
  }

  static MpBall from_double(double x, long prec) {
    MpBall b(prec);
    mpfr_set_d(b.mid_, x, MPFR_RNDN);
    return b;
  }

  long precision() const { return static_cast<long>(mpfr_get_prec(mid_)); }
  const Mag& radius() const { return rad_; }
  const Mag& rad() const { return rad_; }
  Mag& rad() { return rad_; }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_ptr mid() { return mid_; }

  MpBall operator-() const {
    MpBall r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
  }

  friend MpBall operator+(const MpBall& a, const MpBall& b) {
    MpBall r(std::max(a.precision(), b.precision()));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    r.rad_ = add_up(add_up(a.rad_, b.rad_), detail::rounding_error(r.mid_, t));
    return r;
  }

  friend MpBall operator-(const MpBall& a, const MpBall& b) {
    MpBall r(std::max(a.precision(), b.precision()));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    r.rad_ = add_up(add_up(a.rad_, b.rad_), detail::rounding_error(r.mid_, t));
    return r;
  }

  friend MpBall operator*(const MpBall& a, const MpBall& b) {
    MpBall r(std::max(a.precision(), b.precision()));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    Mag rad = detail::rounding_error(r.mid_, t);
    if (!b.rad_.is_zero()) rad = add_up(rad, mul_up(detail::mag_upper(a.mid_), b.rad_));
    if (!a.rad_.is_zero()) {
      rad = add_up(rad, mul_up(detail::mag_upper(b.mid_), a.rad_));
      if (!b.rad_.is_zero()) rad = add_up(rad, mul_up(a.rad_, b.rad_));
    }
    r.rad_ = rad;
    return r;
  }

  MpBall& operator+=(const MpBall& o) {
    int t = mpfr_add(mid_, mid_, o.mid_, MPFR_RNDN);
    rad_ = add_up(add_up(rad_, o.rad_), detail::rounding_error(mid_, t));
    return *this;
  }
  MpBall& operator-=(const MpBall& o) {
    int t = mpfr_sub(mid_, mid_, o.mid_, MPFR_RNDN);
    rad_ = add_up(add_up(rad_, o.rad_), detail::rounding_error(mid_, t));
    return *this;
  }
  MpBall& operator*=(const MpBall& o) { return *this = *this * o; }

  MpBall mul_2exp(std::int64_t k) const {
    MpBall r(*this);
    mpfr_mul_2si(r.mid_, r.mid_, k, MPFR_RNDN);
    r.rad_ = r.rad_.mul_2exp(k);
    return r;
  }

  Mag abs_upper() const { return add_up(detail::mag_upper(mid_), rad_); }
  Mag abs_lower() const { return sub_down(detail::mag_lower(mid_), rad_); }
  bool contains_zero() const { return abs_lower().is_zero(); }
  int sign() const {
    if (contains_zero()) return 0;
    return mpfr_sgn(mid_) > 0 ? 1 : -1;
  }
  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

 private:
  mpfr_t mid_;
  Mag rad_;
};

inline MpBall sqr(const MpBall& a) {
  MpBall r(a.precision());
  int t = mpfr_sqr(r.mid(), a.mid(), MPFR_RNDN);
  Mag rad = detail::rounding_error(r.mid(), t);
  if (!a.rad().is_zero()) {
    Mag m = detail::mag_upper(a.mid());
    rad = add_up(rad, add_up(mul_up(m, a.rad()).mul_2exp(1), mul_up(a.rad(), a.rad())));
  }
  r.rad() = rad;
  return r;
}

}  // namespace rootradii
