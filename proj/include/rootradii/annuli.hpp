#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rootradii/ball_polynomial.hpp"
#include "rootradii/dyadic.hpp"
#include "rootradii/int_polynomial.hpp"
#include "rootradii/precision.hpp"
#include "rootradii/root_radii.hpp"

namespace rootradii {

// Closed annulus r_inner <= |z - c| <= r_outer holding the root radii
// r_t, ..., r_{t+h}. s_plus and s_minus are the signs of
// P(c + r_inner) P(c + r_outer) and P(c - r_inner) P(c - r_outer), 0 if unknown.
struct Annulus {
  GaussInt center;
  double r_inner = 0.0;
  double r_outer = 0.0;
  std::size_t t = 0;
  std::size_t h = 0;
  int s_plus = 0;
  int s_minus = 0;
};

// Disjoint annuli sorted by increasing radius, plus the multiplicity m0 of c as a root.
struct AnnuliCover {
  GaussInt center;
  std::size_t degree = 0;
  std::size_t m0 = 0;
  std::vector<Annulus> annuli;
};

namespace detail {

inline double exp2_down(double x) {
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;
  if (x >= 1024.0) return std::numeric_limits<double>::max();
  double v = std::exp2(x);
  v = std::nextafter(std::nextafter(v, 0.0), 0.0);
  return v;
}

inline double exp2_up(double x) {
  if (x >= 1024.0) return std::numeric_limits<double>::infinity();
  double v = std::exp2(x);
  if (v == 0.0) return std::numeric_limits<double>::denorm_min();
  const double inf = std::numeric_limits<double>::infinity();
  return std::nextafter(std::nextafter(v, inf), inf);
}

template <class B>
int sign_at(const BallPolynomial<B>& p, const Dyadic& x, long prec) {
  return eval_ball(p, B::from_mpz_2exp(x.mantissa(), x.exponent(), prec)).sign();
}

}  // namespace detail

// Signs (s_plus, s_minus) of an annulus centered on a real integer c for real P.
// Each value is evaluated at increasing precision up to a ceiling, then left
// as 0 (unknown).
inline std::pair<int, int> annulus_signs(const IntPolynomial& p, const Annulus& a) {
  if (!p.is_real() || !a.center.is_real()) return {0, 0};
  const Dyadic c(a.center.re, 0);
  const Dyadic ri = Dyadic::from_double(a.r_inner), ro = Dyadic::from_double(a.r_outer);
  const Dyadic pts[4] = {c + ri, c + ro, c - ri, c - ro};
  int sg[4] = {0, 0, 0, 0};
  const long cap = precision_cap(kSignPrecisionCap);
  if (cap >= 53) {
    auto bp = to_real_balls<XBall>(p, 53);
    for (int k = 0; k < 4; ++k) sg[k] = detail::sign_at(bp, pts[k], 53);
  }
  for (long prec = 106; prec <= cap; prec *= 2) {
    if (sg[0] != 0 && sg[1] != 0 && sg[2] != 0 && sg[3] != 0) break;
    auto bp = to_real_balls<MpBall>(p, prec);
    for (int k = 0; k < 4; ++k)
      if (sg[k] == 0) sg[k] = detail::sign_at(bp, pts[k], prec);
  }
  return {sg[0] * sg[1], sg[2] * sg[3]};
}

// Merges the intervals [rho/(1+delta), rho(1+delta)] into disjoint annuli.
inline AnnuliCover build_annuli_cover(const RadiiEstimate& est, const IntPolynomial& p) {
  AnnuliCover cover;
  cover.center = est.center;
  cover.degree = est.degree();
  cover.m0 = est.m0;
  const double w = std::log1p(est.delta.get_d()) / std::log(2.0);
  const double pad = w * 1e-9 + 1e-300;
  const std::size_t n = est.degree() - est.m0;
  std::vector<Annulus> desc;
  for (std::size_t s = 1; s <= n; ++s) {
    const double l = est.log2_rho[s - 1];
    const double lo = l - w - pad, hi = l + w + pad;
    // Touching or overlapping intervals join the previous (outer) annulus.
    if (!desc.empty() && detail::exp2_up(hi) >= desc.back().r_inner) {
      Annulus& a = desc.back();
      a.r_inner = std::min(a.r_inner, detail::exp2_down(lo));
      a.h = s - a.t;
      continue;
    }
    Annulus a;
    a.center = est.center;
    a.r_inner = detail::exp2_down(lo);
    a.r_outer = detail::exp2_up(hi);
    a.t = s;
    a.h = 0;
    desc.push_back(a);
  }
  cover.annuli.assign(desc.rbegin(), desc.rend());
  for (auto& a : cover.annuli) std::tie(a.s_plus, a.s_minus) = annulus_signs(p, a);
  return cover;
}

}  // namespace rootradii
