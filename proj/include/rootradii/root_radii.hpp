#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rootradii/ball_polynomial.hpp"
#include "rootradii/hull.hpp"
#include "rootradii/int_polynomial.hpp"
#include "rootradii/precision.hpp"

namespace rootradii {

// Approximations of the root radii r_1 >= ... >= r_d of P around a center.
// Values are kept as base-2 logarithms so any exponent range fits; the m0
// radii of roots sitting exactly at the center are -infinity.
struct RadiiEstimate {
  GaussInt center;
  mpq_class delta;  // relative width: rho/(1+delta) <= r_s <= (1+delta) rho
  std::size_t m0 = 0;
  int graeffe_steps = 0;
  long precision = 0;  // working precision that certified the result
  std::vector<double> log2_rho;

  std::size_t degree() const { return log2_rho.size(); }
  // rho_s for s = 1..d, saturating at the double range.
  double rho(std::size_t s) const { return std::exp2(log2_rho.at(s - 1)); }
};

namespace detail {

inline double log2_mpz(const mpz_class& z) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

// log2 |g|, or nullopt when g = 0.
inline std::optional<double> log2_abs(const GaussInt& g) {
  if (g.is_zero()) return std::nullopt;
  if (g.im == 0) return log2_mpz(g.re);
  if (g.re == 0) return log2_mpz(g.im);
  return 0.5 * log2_mpz(g.norm());
}

// Hull edge (t, t + h) above abscissa x, i.e. t < x <= t + h.
inline std::pair<std::size_t, std::size_t> edge_above(const std::vector<std::size_t>& hull, std::size_t x) {
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    if (hull[k] < x && x <= hull[k + 1]) return {hull[k], hull[k + 1] - hull[k]};
  }
  throw std::logic_error("edge_above: abscissa outside hull");
}

// log2 rho'_s for s = 1..d from per-index log-magnitudes (finite at 0 and d).
inline std::vector<double> hull_log_radii(const std::vector<std::optional<double>>& p) {
  const std::size_t d = p.size() - 1;
  std::vector<HullPoint<double>> pts(d + 1);
  for (std::size_t j = 0; j <= d; ++j) pts[j] = {static_cast<long>(j), p[j]};
  const auto hull = upper_convex_hull(pts);
  std::vector<double> out(d);
  for (std::size_t s = 1; s <= d; ++s) {
    auto [t, h] = edge_above(hull, d + 1 - s);
    out[s - 1] = (*p[t] - *p[t + h]) / static_cast<double>(h);
  }
  return out;
}

}  // namespace detail

// Radii within a factor 4d of the true radii around 0, from the Newton
// polygon of P. Needs P(0) != 0.
inline RadiiEstimate solve_rrc_star(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("solve_rrc_star: degree must be at least 1");
  if (p[0].is_zero()) throw std::invalid_argument("solve_rrc_star: zero constant coefficient, deflate first");
  const std::size_t d = p.degree();
  std::vector<std::optional<double>> logs(d + 1);
  for (std::size_t j = 0; j <= d; ++j) logs[j] = detail::log2_abs(p[j]);
  RadiiEstimate est;
  est.delta = mpq_class(static_cast<long>(4 * d - 1));
  est.log2_rho = detail::hull_log_radii(logs);
  return est;
}

// Number of root-squaring steps g with (4d)^(1/2^g) <= 1 + delta.
inline int graeffe_count(std::size_t d, const mpq_class& delta) {
  const double need = std::log(4.0 * static_cast<double>(d)) / std::log1p(delta.get_d());
  if (need <= 1.0) return 0;
  return static_cast<int>(std::ceil(std::log2(need)));
}

namespace detail {

// Certified log2-magnitude interval of a ball.
template <class C>
std::pair<double, double> log2_bounds(const C& c) {
  double lo = c.abs_lower().log2(), hi = c.abs_upper().log2();
  auto pad = [](double x) { return 1e-12 * std::max(1.0, std::fabs(x)); };
  if (std::isfinite(lo)) lo -= pad(lo);
  if (std::isfinite(hi)) hi += pad(hi);
  return {lo, hi};
}

// One attempt of the root-radii computation at a fixed precision. Returns the
// log2 radii of the g-th Graeffe iterate, or nullopt if the precision is not
// enough to certify a 1-bit approximation of its Newton polygon.
template <class C>
std::optional<std::vector<double>> rrc_attempt(BallPolynomial<C> q, int g) {
  constexpr double kMaxWidth = 0.125;
  q = graeffe_iterate(std::move(q), g);
  const std::size_t d = q.degree();
  std::vector<double> lo(d + 1), hi(d + 1);
  std::vector<std::optional<double>> mid(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    std::tie(lo[j], hi[j]) = log2_bounds(q[j]);
    if (std::isfinite(lo[j]) && std::isfinite(hi[j]) && hi[j] - lo[j] <= kMaxWidth) mid[j] = 0.5 * (lo[j] + hi[j]);
  }
  if (!mid[0] || !mid[d]) return std::nullopt;
  std::vector<HullPoint<double>> pts(d + 1);
  for (std::size_t j = 0; j <= d; ++j) pts[j] = {static_cast<long>(j), mid[j]};
  const auto hull = upper_convex_hull(pts);
  // Uncertain points must lie under the approximate hull.
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const std::size_t a = hull[k], b = hull[k + 1];
    const double slope = (*mid[b] - *mid[a]) / static_cast<double>(b - a);
    for (std::size_t j = a + 1; j < b; ++j) {
      if (mid[j]) continue;
      if (hi[j] > *mid[a] + slope * static_cast<double>(j - a)) return std::nullopt;
    }
  }
  std::vector<double> out(d);
  for (std::size_t s = 1; s <= d; ++s) {
    auto [t, h] = edge_above(hull, d + 1 - s);
    out[s - 1] = (*mid[t] - *mid[t + h]) / static_cast<double>(h);
  }
  return out;
}

template <class B>
std::optional<std::vector<double>> rrc_attempt_poly(const IntPolynomial& q, int g, long prec) {
  if (q.is_real()) return rrc_attempt(to_real_balls<B>(q, prec), g);
  return rrc_attempt(to_complex_balls<B>(q, prec), g);
}

}  // namespace detail

// Radii of P around c with relative width delta: rho_s/(1+delta) <= r_s(P, c) <= (1+delta) rho_s.
inline RadiiEstimate solve_rrc(const IntPolynomial& p, const GaussInt& c, const mpq_class& delta) {
  if (p.is_zero()) throw std::invalid_argument("solve_rrc: zero polynomial");
  if (delta <= 0) throw std::invalid_argument("solve_rrc: delta must be positive");
  const std::size_t d = p.degree();
  RadiiEstimate est;
  est.center = c;
  est.delta = delta;
  const IntPolynomial shifted = taylor_shift(p, c);
  est.m0 = shifted.trailing_zeros();
  const IntPolynomial q = shifted.shift_down(est.m0);
  est.log2_rho.assign(d, -std::numeric_limits<double>::infinity());
  if (q.degree() == 0) return est;

  const int g = graeffe_count(d, delta);
  est.graeffe_steps = g;
  const long cap = precision_cap(kRadiiPrecisionCap);
  std::optional<std::vector<double>> logs;
  long prec = 53;
  if (cap >= 53) logs = detail::rrc_attempt_poly<XBall>(q, g, 53);
  while (!logs && prec * 2 <= cap) {
    prec *= 2;
    logs = detail::rrc_attempt_poly<MpBall>(q, g, prec);
  }
  if (!logs) throw precision_error("solve_rrc: precision cap reached");
  est.precision = prec;
  const double scale = std::ldexp(1.0, -g);
  double run = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < logs->size(); ++s) {
    run = std::min(run, (*logs)[s] * scale);
    est.log2_rho[s] = run;
  }
  return est;
}

}  // namespace rootradii
