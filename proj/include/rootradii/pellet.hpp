#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rootradii/ball_polynomial.hpp"
#include "rootradii/int_polynomial.hpp"
#include "rootradii/precision.hpp"
#include "rootradii/region.hpp"

namespace rootradii {

// Call counters shared by the tests of one solver run.
struct PelletCounters {
  std::atomic<long> n_t0{0};
  std::atomic<long> n_tstar{0};
};

// Number of root-squaring steps used by the Pellet tests: ceil(log2(1 + log2 d)) + 2.
inline int pellet_graeffe_steps(std::size_t d) {
  if (d <= 1) return 2;
  const double l = std::log2(1.0 + std::log2(static_cast<double>(d)));
  return static_cast<int>(std::ceil(l - 1e-12)) + 2;
}

namespace detail {

enum class PelletOutcome { found, failed, undecided };

// True when the balls are tight enough (total width below 2^(-prec/2) of the
// total magnitude) that an undecided comparison is a near tie more precision
// will not settle usefully.
inline bool balls_are_tight(const std::vector<Mag>& up, const std::vector<Mag>& lo, long prec) {
  Mag width, total;
  for (std::size_t j = 0; j < up.size(); ++j) {
    width = add_up(width, sub_up(up[j], lo[j]));
    total = add_up(total, up[j]);
  }
  return width.log2() - total.log2() < -0.5 * static_cast<double>(prec);
}

// Certified strict dominance |q_k| > sum_{j != k} |q_j| on the current iterate.
// Writes k on success. zero_only restricts the search to k = 0. Undecided
// comparisons on tight balls count as failures.
template <class C>
PelletOutcome pellet_dominance(const BallPolynomial<C>& q, bool zero_only, int& k_out) {
  const std::size_t n = q.size();
  std::vector<Mag> up(n), lo(n);
  for (std::size_t j = 0; j < n; ++j) {
    up[j] = q[j].abs_upper();
    lo[j] = q[j].abs_lower();
  }
  const long prec = q.precision();
  if (zero_only) {
    Mag su, sl;
    for (std::size_t j = 1; j < n; ++j) {
      su = add_up(su, up[j]);
      sl = add_down(sl, lo[j]);
    }
    if (lo[0] > su) {
      k_out = 0;
      return PelletOutcome::found;
    }
    if (up[0] <= sl || balls_are_tight(up, lo, prec)) return PelletOutcome::failed;
    return PelletOutcome::undecided;
  }
  // Prefix and suffix sums, rounded in the safe direction.
  std::vector<Mag> pu(n + 1), pl(n + 1), qu(n + 1), ql(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    pu[j + 1] = add_up(pu[j], up[j]);
    pl[j + 1] = add_down(pl[j], lo[j]);
  }
  for (std::size_t j = n; j-- > 0;) {
    qu[j] = add_up(qu[j + 1], up[j]);
    ql[j] = add_down(ql[j + 1], lo[j]);
  }
  bool undecided = false;
  for (std::size_t k = 0; k < n; ++k) {
    const Mag others_up = add_up(pu[k], qu[k + 1]);
    if (lo[k] > others_up) {
      k_out = static_cast<int>(k);
      return PelletOutcome::found;
    }
    if (!(up[k] <= add_down(pl[k], ql[k + 1]))) undecided = true;
  }
  return undecided && !balls_are_tight(up, lo, prec) ? PelletOutcome::undecided : PelletOutcome::failed;
}

template <class C>
PelletOutcome pellet_run(BallPolynomial<C> q, int steps, bool zero_only, int& k_out) {
  bool undecided = false;
  for (int s = 0;; ++s) {
    PelletOutcome o = pellet_dominance(q, zero_only, k_out);
    if (o == PelletOutcome::found) return o;
    if (o == PelletOutcome::undecided) undecided = true;
    if (s == steps) break;
    q = graeffe_step(q);
  }
  return undecided ? PelletOutcome::undecided : PelletOutcome::failed;
}

template <class B>
BallPolynomial<B> real_balls(const std::vector<mpz_class>& v, long prec) {
  BallPolynomial<B> r;
  r.coeffs.reserve(v.size());
  for (const auto& z : v) r.coeffs.push_back(B::from_mpz(z, prec));
  return r;
}

template <class B>
BallPolynomial<CBall<B>> complex_balls(const ScaledShift& s, long prec) {
  BallPolynomial<CBall<B>> r;
  r.coeffs.reserve(s.re.size());
  for (std::size_t j = 0; j < s.re.size(); ++j) r.coeffs.push_back(CBall<B>::from_mpz(s.re[j], s.im[j], prec));
  return r;
}

template <class B>
PelletOutcome pellet_at(const ScaledShift& s, long prec, int steps, bool zero_only, int& k) {
  if (s.is_real()) return pellet_run(real_balls<B>(s.re, prec), steps, zero_only, k);
  return pellet_run(complex_balls<B>(s, prec), steps, zero_only, k);
}

// Pellet test with the precision ladder 53, 106, 212, ... up to the ceiling.
inline int pellet_test(const IntPolynomial& p, const Disc& disc, bool zero_only) {
  const ScaledShift s = shift_scale(p, disc.re, disc.im, disc.radius);
  const int steps = pellet_graeffe_steps(p.degree());
  const long cap = precision_cap(kPelletPrecisionCap);
  int k = -1;
  PelletOutcome o = PelletOutcome::undecided;
  if (cap >= 53) o = pellet_at<XBall>(s, 53, steps, zero_only, k);
  for (long prec = 106; o == PelletOutcome::undecided && prec <= cap; prec *= 2) {
    o = pellet_at<MpBall>(s, prec, steps, zero_only, k);
  }
  return o == PelletOutcome::found ? k : -1;
}

}  // namespace detail

// Counts the roots of P in the closed disc: k >= 0 is the exact number of roots
// (with multiplicity), -1 means inconclusive.
inline int t_star(const Disc& disc, const IntPolynomial& p, PelletCounters* counters = nullptr) {
  if (counters != nullptr) ++counters->n_tstar;
  if (p.degree() == 0) return 0;
  return detail::pellet_test(p, disc, false);
}

// Exclusion test: 0 means no root in the closed disc, -1 inconclusive.
inline int t_zero(const Disc& disc, const IntPolynomial& p, PelletCounters* counters = nullptr) {
  if (counters != nullptr) ++counters->n_t0;
  if (p.degree() == 0) return 0;
  return detail::pellet_test(p, disc, true) == 0 ? 0 : -1;
}

}  // namespace rootradii
