#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "rootradii/cball.hpp"
#include "rootradii/int_polynomial.hpp"

namespace rootradii {

// Polynomial with ball coefficients; C is a real ball type or CBall<B>.
template <class C>
struct BallPolynomial {
  std::vector<C> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::size_t size() const { return coeffs.size(); }
  const C& operator[](std::size_t j) const { return coeffs[j]; }
  C& operator[](std::size_t j) { return coeffs[j]; }
  long precision() const { return coeffs.empty() ? 0 : coeffs.front().precision(); }
};

template <class B>
struct is_cball : std::false_type {};
template <class B>
struct is_cball<CBall<B>> : std::true_type {};

// Real balls from the real parts of P; throws if P has complex coefficients.
template <class B>
BallPolynomial<B> to_real_balls(const IntPolynomial& p, long prec) {
  if (!p.is_real()) throw std::invalid_argument("to_real_balls: complex coefficients");
  BallPolynomial<B> r;
  r.coeffs.reserve(p.size());
  for (const auto& g : p.coeffs()) r.coeffs.push_back(B::from_mpz(g.re, prec));
  return r;
}

template <class B>
BallPolynomial<CBall<B>> to_complex_balls(const IntPolynomial& p, long prec) {
  BallPolynomial<CBall<B>> r;
  r.coeffs.reserve(p.size());
  for (const auto& g : p.coeffs()) r.coeffs.push_back(CBall<B>::from_mpz(g.re, g.im, prec));
  return r;
}

namespace detail {

// Square of the polynomial sum_k a[k] y^k (symmetric schoolbook product).
template <class C>
std::vector<C> poly_square(const std::vector<C>& a, long prec) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  std::vector<C> out(2 * n - 1, C::zero(prec));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out[i + j] += a[i] * a[j];
  }
  for (auto& c : out) c = c.mul_2exp(1);
  for (std::size_t i = 0; i < n; ++i) out[2 * i] += sqr(a[i]);
  return out;
}

}  // namespace detail

// One root-squaring step: (-1)^d [Pe(y)^2 - y Po(y)^2].
template <class C>
BallPolynomial<C> graeffe_step(const BallPolynomial<C>& p) {
  if (p.coeffs.empty()) throw std::invalid_argument("graeffe_step: zero polynomial");
  const std::size_t d = p.degree();
  const long prec = p.precision();
  std::vector<C> even, odd;
  even.reserve(d / 2 + 1);
  odd.reserve(d / 2 + 1);
  for (std::size_t j = 0; j <= d; ++j) (j % 2 == 0 ? even : odd).push_back(p.coeffs[j]);
  std::vector<C> e2 = detail::poly_square(even, prec);
  std::vector<C> o2 = detail::poly_square(odd, prec);
  BallPolynomial<C> r;
  r.coeffs.reserve(d + 1);
  const bool negate = d % 2 == 1;
  for (std::size_t j = 0; j <= d; ++j) {
    C v = j < e2.size() ? e2[j] : C::zero(prec);
    if (j >= 1 && j - 1 < o2.size()) v -= o2[j - 1];
    r.coeffs.push_back(negate ? -v : std::move(v));
  }
  return r;
}

template <class C>
BallPolynomial<C> graeffe_iterate(BallPolynomial<C> p, int g) {
  if (g < 0) throw std::invalid_argument("graeffe_iterate: negative count");
  for (int k = 0; k < g; ++k) p = graeffe_step(p);
  return p;
}

// Embeds a coefficient into the evaluation domain (real into complex if needed).
template <class Z, class C>
Z lift(const C& c) {
  if constexpr (std::is_same_v<Z, C>) {
    return c;
  } else {
    return Z{c, C::zero(c.precision())};
  }
}

// Horner evaluation; the result contains P(z) for every z in the ball and
// every polynomial inside the coefficient balls.
template <class C, class Z>
Z eval_ball(const BallPolynomial<C>& p, const Z& z) {
  if (p.coeffs.empty()) return Z::zero(z.precision());
  Z acc = lift<Z>(p.coeffs.back());
  for (std::size_t j = p.coeffs.size() - 1; j-- > 0;) acc = acc * z + lift<Z>(p.coeffs[j]);
  return acc;
}

}  // namespace rootradii
