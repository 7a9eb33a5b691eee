#pragma once

// Reference computations for the tests. Nothing here calls into the library's
// shift, squaring or ball code: real roots are counted exactly by Descartes
// bisection on integer polynomials, complex roots come from a multiprecision
// Aberth iteration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include "rootradii/dyadic.hpp"
#include "rootradii/int_polynomial.hpp"

namespace oracle {

using rootradii::Dyadic;
using rootradii::GaussInt;
using rootradii::IntPolynomial;

// ---------------------------------------------------------------------------
// Exact real roots

using ZPoly = std::vector<mpz_class>;

inline ZPoly real_part(const IntPolynomial& p) {
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.re);
  return z;
}

inline int sign_variations(const ZPoly& a) {
  int v = 0, last = 0;
  for (const auto& c : a) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// a(x + 1) by repeated synthetic division.
inline ZPoly shift_one(ZPoly a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
  return a;
}

// Divides out the content, keeping coefficient growth linear in the depth.
inline ZPoly primitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// 2^d a(x/2), made primitive.
inline ZPoly halve(ZPoly a) {
  const std::size_t d = a.size() - 1;
  for (std::size_t j = 0; j <= d; ++j) mpz_mul_2exp(a[j].get_mpz_t(), a[j].get_mpz_t(), d - j);
  return primitive(std::move(a));
}

inline mpq_class eval_q(const ZPoly& a, const mpq_class& x) {
  mpq_class v = 0;
  for (std::size_t j = a.size(); j-- > 0;) v = v * x + mpq_class(a[j]);
  return v;
}

// Number of roots in the open interval (0, 1) of a square-free polynomial.
inline int count_open_unit(const ZPoly& a) {
  ZPoly r(a.rbegin(), a.rend());
  const int v = sign_variations(shift_one(r));
  if (v <= 1) return v;
  const ZPoly h = halve(a);
  const int mid = eval_q(a, mpq_class(1, 2)) == 0 ? 1 : 0;
  return count_open_unit(h) + count_open_unit(shift_one(h)) + mid;
}

// a(l + w x) with denominators cleared.
inline ZPoly compose_linear(const ZPoly& a, const mpq_class& l, const mpq_class& w) {
  std::vector<mpq_class> acc(1, 0);
  for (std::size_t j = a.size(); j-- > 0;) {
    std::vector<mpq_class> next(acc.size() + 1, 0);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k] * l;
      next[k + 1] += acc[k] * w;
    }
    next[0] += mpq_class(a[j]);
    acc = std::move(next);
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  mpz_class den = 1;
  for (const auto& q : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  ZPoly out;
  for (const auto& q : acc) out.push_back(mpz_class(q * den));
  return primitive(std::move(out));
}

// Real roots of a square-free real polynomial in the closed interval [l, r].
inline int count_real_roots(const IntPolynomial& p, const mpq_class& l, const mpq_class& r) {
  const ZPoly a = real_part(p);
  if (l == r) return eval_q(a, l) == 0 ? 1 : 0;
  int n = (eval_q(a, l) == 0) + (eval_q(a, r) == 0);
  return n + count_open_unit(compose_linear(a, l, r - l));
}

// Power-of-two Fujiwara bound 2 max |a_j / a_d|^(1/(d-j)) on the root moduli,
// from bit lengths: |a_j| < 2^bits_j and |a_d| >= 2^(bits_d - 1).
inline mpz_class root_bound(const IntPolynomial& p) {
  auto bits = [](const rootradii::GaussInt& c) {
    const mpz_class m = abs(c.re) + abs(c.im);
    return m == 0 ? 0L : static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  };
  const long d = static_cast<long>(p.size()) - 1, bd = bits(p.leading());
  long k = 0;
  for (long j = 0; j < d; ++j) {
    const long bj = bits(p[static_cast<std::size_t>(j)]);
    if (bj == 0) continue;
    const long num = bj - bd + 1;
    k = std::max(k, num > 0 ? (num + (d - j) - 1) / (d - j) : 0L);
  }
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
  return b;
}

inline int count_all_real_roots(const IntPolynomial& p) {
  const mpz_class b = root_bound(p);
  return count_real_roots(p, mpq_class(-b), mpq_class(b));
}

// ---------------------------------------------------------------------------
// Complex roots

using mpf = boost::multiprecision::mpfr_float;

struct Cx {
  mpf re, im;
};

inline Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Cx operator/(const Cx& a, const Cx& b) {
  const mpf n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline mpf abs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

inline mpf to_mpf(const mpz_class& z) { return mpf(z.get_str()); }

inline mpf to_mpf(const Dyadic& x) {
  mpf m = to_mpf(x.mantissa());
  return ldexp(m, static_cast<int>(x.exponent()));
}

// Roots by Aberth iteration: a double-precision pass from a circle of
// starting points, then refinement at `bits` of precision. Simple roots come
// out accurate to nearly full precision; a root of multiplicity m only to
// about bits / m.
inline std::vector<Cx> aberth_roots(const IntPolynomial& p, unsigned bits = 320) {
  using cd = std::complex<long double>;
  const std::size_t d = p.degree();
  std::vector<cd> a(d + 1);
  std::vector<long double> la(d + 1, -1e300L);
  for (std::size_t j = 0; j <= d; ++j) {
    a[j] = {static_cast<long double>(p[j].re.get_d()), static_cast<long double>(p[j].im.get_d())};
    if (!p[j].is_zero()) la[j] = std::log(std::abs(a[j]));
  }
  // Starting points on circles whose radii come from the Newton polygon of
  // the coefficient moduli, so roots of very different sizes start close.
  std::vector<cd> z0;
  for (std::size_t i = 0; i < d;) {
    std::size_t best = i + 1;
    long double slope = -1e300L;
    for (std::size_t j = i + 1; j <= d; ++j) {
      const long double s = (la[j] - la[i]) / static_cast<long double>(j - i);
      if (la[j] > -1e299L && s >= slope) slope = s, best = j;
    }
    const long double r = std::exp(-slope);
    const std::size_t n = best - i;
    for (std::size_t k = 0; k < n; ++k)
      z0.push_back(std::polar(r, 6.283185307179586L * static_cast<long double>(k) / static_cast<long double>(n) +
                                     0.4L + static_cast<long double>(i)));
    i = best;
  }
  for (int it = 0; it < 500; ++it) {
    long double moved = 0;
    for (std::size_t k = 0; k < d; ++k) {
      cd v = 0, dv = 0;
      for (std::size_t j = d + 1; j-- > 0;) {
        dv = dv * z0[k] + v;
        v = v * z0[k] + a[j];
      }
      if (v == cd(0)) continue;
      const cd ratio = v / dv;
      cd s = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += 1.0L / (z0[k] - z0[j]);
      const cd w = ratio / (1.0L - ratio * s);
      if (std::isfinite(w.real()) && std::isfinite(w.imag())) {
        z0[k] -= w;
        moved = std::max(moved, std::abs(w) / (std::abs(z0[k]) + 1));
      }
    }
    if (moved < 1e-16L) break;
  }

  const unsigned digits = static_cast<unsigned>(bits * 0.30103) + 2;
  mpf::default_precision(digits);
  std::vector<Cx> c(d + 1), dc(d);
  for (std::size_t j = 0; j <= d; ++j) c[j] = {to_mpf(p[j].re), to_mpf(p[j].im)};
  for (std::size_t j = 1; j <= d; ++j) dc[j - 1] = {c[j].re * j, c[j].im * j};
  std::vector<Cx> z(d);
  for (std::size_t k = 0; k < d; ++k) z[k] = {mpf(z0[k].real()), mpf(z0[k].imag())};
  auto horner = [](const std::vector<Cx>& q, const Cx& x) {
    Cx v{0, 0};
    for (std::size_t j = q.size(); j-- > 0;) v = v * x + q[j];
    return v;
  };
  const mpf tol = ldexp(mpf(1), -static_cast<int>(bits) + 16);
  std::vector<bool> done(d, false);
  for (int it = 0; it < 4000; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      const Cx v = horner(c, z[k]);
      if (v.re == 0 && v.im == 0) {
        done[k] = true;
        continue;
      }
      const Cx ratio = v / horner(dc, z[k]);
      Cx s{0, 0};
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s = s + Cx{1, 0} / (z[k] - z[j]);
      const Cx w = ratio / (Cx{1, 0} - ratio * s);
      z[k] = z[k] - w;
      if (abs(w) <= tol * (abs(z[k]) + 1)) done[k] = true;
      else all = false;
    }
    if (all) break;
  }
  return z;
}

// Exact roots of the grid family: a + ib for -n <= a, b <= n.
inline std::vector<std::pair<long, long>> grid_roots(long n) {
  std::vector<std::pair<long, long>> r;
  for (long a = -n; a <= n; ++a)
    for (long b = -n; b <= n; ++b) r.emplace_back(a, b);
  return r;
}

// Roots counted in the closed disc D(c, r), or -1 when some root lies within
// `slack` of the boundary and membership is not clear at oracle accuracy.
inline int count_in_disc(const std::vector<Cx>& roots, const mpf& cre, const mpf& cim, const mpf& r,
                         const mpf& slack) {
  int n = 0;
  for (const auto& z : roots) {
    const mpf dist = abs(Cx{z.re - cre, z.im - cim});
    if (abs(dist - r) <= slack) return -1;
    if (dist < r) ++n;
  }
  return n;
}

// Root moduli around c in decreasing order.
inline std::vector<mpf> radii_around(const std::vector<Cx>& roots, const Cx& c) {
  std::vector<mpf> r;
  for (const auto& z : roots) r.push_back(abs(z - c));
  std::sort(r.begin(), r.end(), [](const mpf& a, const mpf& b) { return a > b; });
  return r;
}

inline std::vector<Cx> exact_roots_as_cx(const std::vector<std::pair<long, long>>& rs) {
  std::vector<Cx> out;
  for (const auto& [a, b] : rs) out.push_back({mpf(a), mpf(b)});
  return out;
}

}  // namespace oracle
