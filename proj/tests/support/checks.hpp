#pragma once

// Checks shared by the unit suites and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rootradii/ball_polynomial.hpp"
#include "rootradii/pellet.hpp"
#include "rootradii/root_radii.hpp"
#include "support/corpus.hpp"

namespace checks {

using oracle::Cx;
using oracle::mpf;
using rootradii::Disc;
using rootradii::Dyadic;
using rootradii::GaussInt;
using rootradii::IntPolynomial;

inline IntPolynomial from_roots(long lc, const std::vector<long>& roots) {
  IntPolynomial p{lc};
  for (long r : roots) p = p * IntPolynomial::linear(GaussInt(r));
  return p;
}

// Root-squaring coefficients from the convolution formula
// G_j = (-1)^(d-j) [a_j^2 + 2 sum_{k<j} (-1)^(j-k) a_k a_{2j-k}].
inline std::vector<mpq_class> graeffe_convolution(const std::vector<mpq_class>& a) {
  const long d = static_cast<long>(a.size()) - 1;
  std::vector<mpq_class> g(a.size());
  for (long j = 0; j <= d; ++j) {
    mpq_class s = a[j] * a[j];
    for (long k = std::max(0L, 2 * j - d); k < j; ++k) s += 2 * (((j - k) % 2) ? -1 : 1) * a[k] * a[2 * j - k];
    g[j] = ((d - j) % 2) ? -s : s;
  }
  return g;
}

inline mpq_class to_mpq(const rootradii::MpBall& b) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), b.mid());
  return Dyadic(m, e).to_mpq();
}

// The exact root-squared polynomial agrees with one Graeffe step.
inline bool graeffe_matches_squared_roots(long lc, const std::vector<long>& roots) {
  std::vector<long> squares;
  for (long r : roots) squares.push_back(r * r);
  const IntPolynomial p = from_roots(lc, roots), expect = from_roots(lc * lc, squares);
  const auto g = rootradii::graeffe_step(rootradii::to_real_balls<rootradii::MpBall>(p, 256));
  if (g.size() != expect.size()) return false;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!g[j].rad().is_zero()) return false;
    if (to_mpq(g[j]) != mpq_class(expect[j].re)) return false;
  }
  return true;
}

inline mpf log2_mpf(const mpf& x) { return log(x) / log(mpf(2)); }

inline Cx as_cx(const GaussInt& c) { return {oracle::to_mpf(c.re), oracle::to_mpf(c.im)}; }

// Radii outside rho/(1+delta) <= r <= (1+delta) rho, with delta = 1/d^2.
inline int rrc_violations(const corpus::Case& c, const GaussInt& ctr) {
  const std::size_t d = c.p.degree();
  const mpq_class delta(1, static_cast<unsigned long>(d * d));
  const mpf lw = log2_mpf(mpf(1) + mpf(1) / mpf(d * d));
  const auto e = rootradii::solve_rrc(c.p, ctr, delta);
  const auto r = oracle::radii_around(c.roots, as_cx(ctr));
  int bad = 0;
  for (std::size_t s = 1; s <= d; ++s) {
    if (s > d - e.m0) {
      bad += r[s - 1] >= mpf(1e-60);
      continue;
    }
    const mpf lr = log2_mpf(r[s - 1]), lrho = mpf(e.log2_rho[s - 1]);
    bad += !(lrho - lw <= lr && lr <= lrho + lw);
  }
  return bad;
}

// Radii outside the strict 4d-factor bracket of the coefficient-hull estimate.
inline int rrc_star_violations(const corpus::Case& c, const GaussInt& ctr) {
  const IntPolynomial q0 = rootradii::taylor_shift(c.p, ctr);
  const IntPolynomial q = q0.shift_down(q0.trailing_zeros());
  if (q.degree() == 0) return 0;
  const std::size_t d = q.degree();
  const auto e = rootradii::solve_rrc_star(q);
  const auto r = oracle::radii_around(c.roots, as_cx(ctr));
  const mpf lf = log2_mpf(mpf(4 * d));
  int bad = 0;
  for (std::size_t s = 1; s <= d; ++s) {
    const mpf lr = log2_mpf(r[s - 1]), lrho = mpf(e.log2_rho[s - 1]);
    bad += !(lrho - lf < lr && lr < lrho + lf);
  }
  return bad;
}

// Random discs around the roots of a case: centers near a root, radii from a
// fraction to a few times the distance to the nearest other root.
inline std::vector<Disc> sample_discs(const corpus::Case& c, std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Disc> out;
  const auto& roots = c.roots;
  for (int i = 0; i < n; ++i) {
    const auto& z = roots[rng() % roots.size()];
    double gap = 1e300;
    for (const auto& w : roots) {
      const double g = oracle::abs(z - w).convert_to<double>();
      if (g > 1e-30) gap = std::min(gap, g);
    }
    if (gap == 1e300) gap = 1.0;
    const double cre = z.re.convert_to<double>() + gap * (u(rng) - 0.5);
    const double cim = z.im.convert_to<double>() + gap * (u(rng) - 0.5);
    const double r = gap * (0.05 + 3.0 * u(rng) * u(rng));
    // Coarse dyadics keep the shifts cheap.
    auto coarse = [](double x) { return Dyadic::from_double(std::ldexp(std::round(std::ldexp(x, 12)), -12)); };
    Dyadic rad = coarse(r);
    if (rad.sign() <= 0) rad = Dyadic::pow2(-12);
    out.push_back({coarse(cre), coarse(cim), rad});
  }
  return out;
}

inline const mpf& slack() {
  static const mpf s = ldexp(mpf(1), -200);
  return s;
}

inline int oracle_count(const corpus::Case& c, const Disc& d) {
  return oracle::count_in_disc(c.roots, oracle::to_mpf(d.re), oracle::to_mpf(d.im), oracle::to_mpf(d.radius), slack());
}

// Some root z with lo <= |z - c| <= hi, up to oracle accuracy.
inline bool root_in_ring(const corpus::Case& c, const Disc& d, const mpf& lo, const mpf& hi) {
  const Cx ctr{oracle::to_mpf(d.re), oracle::to_mpf(d.im)};
  for (const auto& z : c.roots) {
    const mpf r = oracle::abs(z - ctr);
    if (lo - slack() <= r && r <= hi + slack()) return true;
  }
  return false;
}

}  // namespace checks
