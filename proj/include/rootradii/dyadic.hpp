#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace rootradii {

// Exact number man * 2^exp. The mantissa is odd, or zero with exp == 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : man_(v) { normalize(); }  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class m, std::int64_t e) : man_(std::move(m)), exp_(e) { normalize(); }

  static Dyadic pow2(std::int64_t e) { return Dyadic(mpz_class(1), e); }

  // Exact conversion of a finite double.
  static Dyadic from_double(double x) {
    if (x == 0.0) return {};
    int k = 0;
    double m = std::frexp(x, &k);
    mpz_class z;
    mpz_set_d(z.get_mpz_t(), std::ldexp(m, 53));
    return Dyadic(z, static_cast<std::int64_t>(k) - 53);
  }

  const mpz_class& mantissa() const { return man_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return man_ == 0; }
  int sign() const { return sgn(man_); }

  Dyadic operator-() const { return Dyadic(-man_, exp_); }
  Dyadic abs() const { return Dyadic(::abs(man_), exp_); }
  Dyadic mul_2exp(std::int64_t k) const { return is_zero() ? Dyadic() : Dyadic(man_, exp_ + k); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t e = std::min(a.exp_, b.exp_);
    mpz_class x, y;
    mpz_mul_2exp(x.get_mpz_t(), a.man_.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp_ - e));
    mpz_mul_2exp(y.get_mpz_t(), b.man_.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp_ - e));
    return Dyadic(x + y, e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_); }

  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.man_ == b.man_ && a.exp_ == b.exp_; }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int s = sgn((a - b).man_);
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Write the value as m * 2^e with the requested exponent e <= exponent().
  mpz_class scaled_to(std::int64_t e) const {
    mpz_class r;
    mpz_mul_2exp(r.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_ - e));
    return r;
  }

  mpq_class to_mpq() const {
    mpq_class q(man_);
    if (exp_ >= 0) {
      mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exp_));
    } else {
      mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp_));
    }
    return q;
  }

  // Nearest double (may overflow to inf or underflow to 0).
  double to_double() const {
    if (is_zero()) return 0.0;
    long e = 0;
    double d = mpz_get_d_2exp(&e, man_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(std::clamp<std::int64_t>(e + exp_, -4000, 4000)));
  }

  // Numerator and (power of two) denominator.
  mpz_class numerator() const {
    if (exp_ >= 0) return scaled_to(0);
    return man_;
  }
  mpz_class denominator() const {
    mpz_class d(1);
    if (exp_ < 0) mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
    return d;
  }

  std::string str() const {
    if (exp_ >= 0) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
  }

 private:
  void normalize() {
    if (man_ == 0) {
      exp_ = 0;
      return;
    }
    mp_bitcnt_t z = mpz_scan1(man_.get_mpz_t(), 0);
    if (z > 0) {
      mpz_tdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), z);
      exp_ += static_cast<std::int64_t>(z);
    }
  }

  mpz_class man_;
  std::int64_t exp_ = 0;
};

}  // namespace rootradii
