#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootradii/annuli.hpp"
#include "rootradii/interval.hpp"
#include "rootradii/pellet.hpp"
#include "rootradii/root_radii.hpp"
#include "rootradii/subdivision.hpp"

namespace rootradii {

// Annulus counts for a real segment B lying strictly on one side of the
// cover's (real) center. Only annuli meeting B are counted; annuli of
// unknown sign only enter n.
//   n0:  one root, no sign change on B's side (so no root there)
//   n1:  one root, sign change, real part inside B
//   ge1: sign change with real part inside 2B
//   ge1_ring: sign change with real part inside 2B minus (1/2)B
struct RealAnnuliCounts {
  int n = 0;
  int n0 = 0;
  int n1 = 0;
  int ge1 = 0;
  int ge1_ring = 0;
};

inline RealAnnuliCounts real_annuli_counts(const AnnuliCover& cover, const Dyadic& left, const Dyadic& right) {
  if (!cover.center.is_real()) throw std::invalid_argument("real_annuli_counts: center must be real");
  const Dyadic c(cover.center.re, 0);
  const Dyadic l = left - c, r = right - c;
  if (l.sign() <= 0 && r.sign() >= 0) throw std::invalid_argument("real_annuli_counts: segment contains the center");
  const bool pos = l.sign() > 0;
  // B as distances from the center.
  const Dyadic bl = pos ? l : -r, br = pos ? r : -l;
  const Dyadic w = br - bl, mid = (bl + br).mul_2exp(-1);
  const Interval L = Interval::from_dyadic(bl), R = Interval::from_dyadic(br);
  const Interval L2 = Interval::from_dyadic(mid - w), R2 = Interval::from_dyadic(mid + w);
  const Interval Lh = Interval::from_dyadic(mid - w.mul_2exp(-2)), Rh = Interval::from_dyadic(mid + w.mul_2exp(-2));
  const Interval outer{L.lo, R.hi}, inner{L.hi, R.lo}, inner2{L2.hi, R2.lo};
  RealAnnuliCounts k;
  for (const auto& a : cover.annuli) {
    const Interval rs{a.r_inner, a.r_outer};
    if (!may_intersect(rs, outer)) continue;
    ++k.n;
    const int ss = pos ? a.s_plus : a.s_minus;
    if (ss > 0 && a.h == 0) ++k.n0;
    if (ss >= 0) continue;
    if (a.h == 0 && certainly_subset(rs, inner)) ++k.n1;
    if (certainly_subset(rs, inner2)) {
      ++k.ge1;
      if (rs.hi < Lh.lo || rs.lo > Rh.hi) ++k.ge1_ring;
    }
  }
  return k;
}

// Result of a test plus whether a Pellet test had to run.
struct TestResult {
  int value = -1;
  bool pellet = false;
};

// Exclusion test on a segment off the cover's center: 0 means no root in
// the disc Delta(B).
inline TestResult cr_zero(const Region& b, const IntPolynomial& p, const AnnuliCover& cover,
                          PelletCounters* counters = nullptr) {
  const auto k = real_annuli_counts(cover, b.left(), b.right());
  if (k.n == k.n0) return {0, false};
  if (k.ge1 >= 1) return {-1, false};
  return {t_zero(b.covering_disc(), p, counters), true};
}

// Counting test on a segment off the cover's center: number of roots in
// Delta(B), or -1.
inline TestResult cr_star(const Region& b, const IntPolynomial& p, const AnnuliCover& cover,
                          PelletCounters* counters = nullptr) {
  const auto k = real_annuli_counts(cover, b.left(), b.right());
  if (k.n == k.n0 + k.n1) return {k.n1, false};
  if (k.ge1_ring >= 1) return {-1, false};
  return {t_star(b.covering_disc(), p, counters), true};
}

// log2 of a power of two below half the minimal distance between distinct
// roots of P (valid without square-freeness).
inline std::int64_t separation_log2(const IntPolynomial& p) {
  const double d = static_cast<double>(p.degree());
  if (p.degree() < 2) return 0;
  mpz_class n2 = 0;
  for (std::size_t j = 0; j < p.size(); ++j) n2 += p[j].norm();
  const double log_norm = 0.5 * detail::log2_mpz(n2) + 1e-9;
  const double v = 0.5 * std::log2(3.0) - 0.5 * (d + 2.0) * std::log2(d) - (d - 1.0) * (d + log_norm);
  return static_cast<std::int64_t>(std::floor(v - 1e-9)) - 1;
}

struct RealRoot {
  Dyadic left;
  Dyadic right;
  int multiplicity = 1;
};

struct RealIsolation {
  std::vector<RealRoot> roots;  // sorted by left endpoint
  RunStats stats;
};

// Isolates the real roots of a real integer polynomial in pairwise disjoint
// closed segments; each segment holds exactly `multiplicity` roots counted
// with multiplicity, all of them real and equal when the multiplicity exceeds 1.
inline RealIsolation isolate_real(const IntPolynomial& poly, const SolverOptions& opt = {}) {
  if (poly.is_zero()) throw std::invalid_argument("isolate_real: zero polynomial");
  if (!poly.is_real()) throw std::invalid_argument("isolate_real: polynomial must have real coefficients");
  detail::Stopwatch total;
  RealIsolation out;
  RunStats& st = out.stats;
  PelletCounters pc;
  detail::HookGate gate(opt.hooks);

  const std::size_t m0 = poly.trailing_zeros();
  const IntPolynomial p = poly.shift_down(m0);
  if (m0 > 0) out.roots.push_back({Dyadic(), Dyadic(), static_cast<int>(m0)});
  if (p.degree() == 0) {
    st.t_total = total.seconds();
    return out;
  }
  const std::size_t d = p.degree();
  const IntPolynomial dp = p.derivative();
  const bool radii = opt.mode == Mode::radii;

  AnnuliCover cover;
  if (radii) {
    detail::Stopwatch t;
    const mpq_class delta = opt.delta.value_or(mpq_class(1, static_cast<unsigned long>(d * d)));
    cover = build_annuli_cover(solve_rrc(p, GaussInt(0), delta), p);
    st.t_radii = t.seconds();
  }
  const Dyadic half_sep = Dyadic::pow2(separation_log2(p) - 1);
  const Dyadic R = fujiwara_bound(p);

  // Exclusion of one region; the center 0 forces a Pellet test.
  auto exclude = [&](const Region& b) -> TestResult {
    if (radii && !b.contains_real(Dyadic())) {
      TestResult r = cr_zero(b, p, cover, &pc);
      return r;
    }
    return {t_zero(b.covering_disc(), p, &pc), true};
  };
  // Root count in Delta(2 B_C).
  auto count = [&](const Region& bc) -> TestResult {
    const Region b2 = bc.dilate_pow2(1);
    if (radii && !bc.dilate_pow2(2).contains_real(Dyadic())) return cr_star(b2, p, cover, &pc);
    return {t_star(b2.covering_disc(), p, &pc), true};
  };

  std::vector<detail::Component> active(1);
  active[0].regions = {Region::segment(-R.mul_2exp(-1), R), Region::segment(R.mul_2exp(-1), R)};
  std::vector<Region> solved;
  std::vector<RealRoot> found;
  std::atomic<long> ann_excl{0};

  while (!active.empty()) {
    ++st.tree_depth;
    std::vector<detail::Component> keep, split;
    // Decided before any component is moved out of the active list.
    std::vector<char> isolated(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Region bc = detail::enclosing_region(active[i]);
      isolated[i] = detail::disc_is_isolated(Disc{bc.re, Dyadic(), bc.width.mul_2exp(1)}, active, i, solved);
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      detail::Component& c = active[i];
      const Region bc = detail::enclosing_region(c);
      if (!isolated[i]) {
        c.m = -1;
        c.stable = 0;
        split.push_back(std::move(c));
        continue;
      }
      const TestResult r = count(bc);
      gate.test(TestKind::counting, bc.dilate_pow2(1), r.value, r.pellet);
      if (!r.pellet) ++st.n_annuli_counted;
      if (r.value == 0) continue;
      c.stable = (r.value > 0 && r.value == c.m) ? c.stable + 1 : 0;
      c.m = r.value;
      const bool touches_zero = m0 > 0 && bc.contains_real(Dyadic());
      if (c.m > 0 && !touches_zero && (c.m == 1 || bc.width < half_sep)) {
        bool clear = true;
        for (const auto& s : found)
          if (!(bc.right() < s.left || s.right < bc.left())) clear = false;
        if (clear) {
          found.push_back({bc.left(), bc.right(), c.m});
          solved.push_back(bc);
          continue;
        }
      }
      if (c.m > 0 && c.stable >= 4) {
        ++st.n_newton_attempts;
        const Dyadic wn = bc.width.mul_2exp(-c.log2_newton);
        auto z = detail::newton_step(p, dp, bc.re, Dyadic(), c.m, detail::newton_precision(p, bc.re, Dyadic(), wn, c.m));
        bool ok = false;
        if (z) {
          const Dyadic zc = detail::round_to_grid(z->first, wn.mul_2exp(-2));
          const Disc target{zc, Dyadic(), wn.mul_2exp(-1)};
          if (disc_inside(target, Disc{bc.re, Dyadic(), bc.width})) ok = t_star(target, p, &pc) == c.m;
          gate.newton(target, c.m, ok);
          if (ok) {
            ++st.n_newton_accepted;
            c.regions = {Region::segment(zc, wn, bc.depth)};
            c.log2_newton *= 2;
            keep.push_back(std::move(c));
            continue;
          }
        }
        c.log2_newton = std::max(2, c.log2_newton / 2);
      }
      split.push_back(std::move(c));
    }

    // Subdivide and run the exclusion tests.
    std::vector<Region> kids;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < split.size(); ++i)
      for (const auto& r : split[i].regions)
        for (auto& k : r.children()) {
          kids.push_back(std::move(k));
          owner.push_back(i);
        }
    st.boxes_visited += static_cast<long>(kids.size());
    std::vector<char> alive(kids.size(), 0);
    detail::parallel_for(kids.size(), opt.threads, [&](std::size_t j) {
      const TestResult r = exclude(kids[j]);
      if (!r.pellet && r.value == 0) ++ann_excl;
      gate.test(TestKind::exclusion, kids[j], r.value, r.pellet);
      alive[j] = r.value != 0;
    });
    std::vector<std::vector<Region>> survivors(split.size());
    for (std::size_t j = 0; j < kids.size(); ++j)
      if (alive[j]) survivors[owner[j]].push_back(std::move(kids[j]));
    for (std::size_t i = 0; i < split.size(); ++i) {
      auto groups = detail::connected_groups(survivors[i]);
      for (auto& g : groups) {
        detail::Component c;
        c.regions = std::move(g);
        if (groups.size() == 1) {
          c.m = split[i].m;
          c.stable = split[i].stable;
          c.log2_newton = split[i].log2_newton;
        }
        keep.push_back(std::move(c));
      }
    }
    active = std::move(keep);
  }

  out.roots.insert(out.roots.end(), found.begin(), found.end());
  std::sort(out.roots.begin(), out.roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.left < b.left; });
  st.n_annuli_excluded = ann_excl.load();
  st.n_t0 = pc.n_t0.load();
  st.n_tstar = pc.n_tstar.load();
  st.t_total = total.seconds();
  return out;
}

}  // namespace rootradii
