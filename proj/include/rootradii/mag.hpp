#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <utility>

namespace rootradii {

// Nonnegative magnitude m * 2^e with a 53-bit mantissa and a 64-bit exponent.
//
// Every arithmetic helper names its rounding direction: the *_up functions
// return an upper bound of the exact result, the *_down functions a lower
// bound. Mantissas are kept in [0.5, 1) so comparisons are exact.
class Mag {
 public:
  constexpr Mag() = default;

  static Mag zero() { return Mag(); }

  // Exactly 2^e.
  static Mag pow2(std::int64_t e) { return Mag(0.5, e + 1); }

  // Exactly |x| * 2^e for a finite double x.
  static Mag from_scaled(double x, std::int64_t e) {
    x = std::fabs(x);
    if (x == 0.0) return Mag();
    int k = 0;
    double m = std::frexp(x, &k);
    return Mag(m, e + k);
  }

  static Mag from_double(double x) { return from_scaled(x, 0); }

  bool is_zero() const { return man_ == 0.0; }
  double mantissa() const { return man_; }
  std::int64_t exponent() const { return exp_; }

  // log2 of the value; -inf for zero. Accurate to a few ulps of the result.
  double log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(exp_) + std::log2(man_);
  }

  // Nearest double; saturates to 0 or +inf outside the double range.
  double to_double() const {
    if (is_zero()) return 0.0;
    if (exp_ > 1100) return std::numeric_limits<double>::infinity();
    if (exp_ < -1100) return 0.0;
    return std::ldexp(man_, static_cast<int>(exp_));
  }

  Mag mul_2exp(std::int64_t k) const { return is_zero() ? Mag() : Mag(man_, exp_ + k); }

  friend bool operator==(const Mag& a, const Mag& b) { return a.man_ == b.man_ && a.exp_ == b.exp_; }
  friend std::strong_ordering operator<=>(const Mag& a, const Mag& b) {
    if (a.is_zero() || b.is_zero()) {
      if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
      return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.exp_ != b.exp_) return a.exp_ <=> b.exp_;
    if (a.man_ < b.man_) return std::strong_ordering::less;
    if (a.man_ > b.man_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Mag add_up(const Mag& a, const Mag& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Mag& hi = a.exp_ >= b.exp_ ? a : b;
    const Mag& lo = a.exp_ >= b.exp_ ? b : a;
    const std::int64_t diff = hi.exp_ - lo.exp_;
    if (diff > 64) return normalized(up(hi.man_), hi.exp_);
    return normalized(up(hi.man_ + std::ldexp(lo.man_, -static_cast<int>(diff))), hi.exp_);
  }

  friend Mag add_down(const Mag& a, const Mag& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Mag& hi = a.exp_ >= b.exp_ ? a : b;
    const Mag& lo = a.exp_ >= b.exp_ ? b : a;
    const std::int64_t diff = hi.exp_ - lo.exp_;
    if (diff > 64) return hi;
    return normalized(down(hi.man_ + std::ldexp(lo.man_, -static_cast<int>(diff))), hi.exp_);
  }

  // Lower bound of max(a - b, 0).
  friend Mag sub_down(const Mag& a, const Mag& b) {
    if (b.is_zero()) return a;
    if (a <= b) return Mag();
    const std::int64_t diff = a.exp_ - b.exp_;
    if (diff > 64) return normalized(down(a.man_), a.exp_);
    double m = down(a.man_ - std::ldexp(b.man_, -static_cast<int>(diff)));
    return m > 0.0 ? normalized(m, a.exp_) : Mag();
  }

  // Upper bound of a - b, assuming a >= b.
  friend Mag sub_up(const Mag& a, const Mag& b) {
    if (b.is_zero()) return a;
    if (a <= b) return Mag();
    const std::int64_t diff = a.exp_ - b.exp_;
    if (diff > 64) return a;
    double m = up(a.man_ - std::ldexp(b.man_, -static_cast<int>(diff)));
    return normalized(m, a.exp_);
  }

  friend Mag mul_up(const Mag& a, const Mag& b) {
    if (a.is_zero() || b.is_zero()) return Mag();
    return normalized(up(a.man_ * b.man_), a.exp_ + b.exp_);
  }

  friend Mag mul_down(const Mag& a, const Mag& b) {
    if (a.is_zero() || b.is_zero()) return Mag();
    return normalized(down(a.man_ * b.man_), a.exp_ + b.exp_);
  }

  friend Mag sqrt_up(const Mag& a) {
    if (a.is_zero()) return a;
    auto [m, e] = even_split(a);
    return normalized(up(std::sqrt(m)), e / 2);
  }

  friend Mag sqrt_down(const Mag& a) {
    if (a.is_zero()) return a;
    auto [m, e] = even_split(a);
    return normalized(down(std::sqrt(m)), e / 2);
  }

 private:
  constexpr Mag(double m, std::int64_t e) : man_(m), exp_(e) {}

  static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
  static double down(double x) { return std::nextafter(x, 0.0); }

  static Mag normalized(double m, std::int64_t e) {
    if (m == 0.0) return Mag();
    int k = 0;
    double n = std::frexp(m, &k);
    return Mag(n, e + k);
  }

  // Writes the value as m * 2^e with e even.
  static std::pair<double, std::int64_t> even_split(const Mag& a) {
    if (a.exp_ % 2 == 0) return {a.man_, a.exp_};
    return {a.man_ * 2.0, a.exp_ - 1};
  }

  double man_ = 0.0;
  std::int64_t exp_ = 0;
};

}  // namespace rootradii
