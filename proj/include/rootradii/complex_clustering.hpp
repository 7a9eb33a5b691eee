#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootradii/annuli.hpp"
#include "rootradii/interval.hpp"
#include "rootradii/pellet.hpp"
#include "rootradii/real_isolation.hpp"
#include "rootradii/root_radii.hpp"
#include "rootradii/subdivision.hpp"

namespace rootradii {

// Disc with double center and an upper bound on the radius.
struct CoverDisc {
  double re = 0.0;
  double im = 0.0;
  double radius = 0.0;
};

namespace detail {

inline std::vector<std::pair<double, double>> radial_ranges(const AnnuliCover& c) {
  std::vector<std::pair<double, double>> r;
  if (c.m0 > 0) r.emplace_back(0.0, 0.0);
  for (const auto& a : c.annuli) r.emplace_back(a.r_inner, a.r_outer);
  return r;
}

inline Interval isect(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

inline bool empty(const Interval& a) { return !(a.lo <= a.hi); }

// Smallest disc around the rectangle's center containing the rectangle.
inline CoverDisc enclose(const Interval& x, const Interval& y) {
  const double cx = 0.5 * (x.lo + x.hi), cy = 0.5 * (y.lo + y.hi);
  const double hx = std::max(Interval::up(x.hi - cx), Interval::up(cx - x.lo));
  const double hy = std::max(Interval::up(y.hi - cy), Interval::up(cy - y.lo));
  const Interval r2 = sqr(Interval::point(hx)) + sqr(Interval::point(hy));
  return {cx, cy, Interval::up(sqrt(r2).hi)};
}

// Lower and upper bounds of |z - c| for z in the disc, c = (cre, cim).
inline Interval distance_range(const CoverDisc& d, double cre, double cim) {
  const Interval dx = Interval::point(d.re) - Interval::point(cre), dy = Interval::point(d.im) - Interval::point(cim);
  const Interval dist = sqrt(sqr(dx) + sqr(dy));
  return {Interval::down(dist.lo - d.radius), Interval::up(dist.hi + d.radius)};
}

inline bool meets_some_ring(const CoverDisc& d, const std::vector<std::pair<double, double>>& rings, double cre,
                            double cim) {
  const Interval dr = distance_range(d, cre, cim);
  for (const auto& [lo, hi] : rings)
    if (dr.lo <= hi && dr.hi >= lo) return true;
  return false;
}

}  // namespace detail

// Discs covering the intersections of the annuli around 0 and 1, kept only
// when they meet an annulus around i (and, for real P, so do their mirror
// images). Every root of P lies in one of the discs; at most 2 d^2 discs.
inline std::vector<CoverDisc> disc_cover(const AnnuliCover& a0, const AnnuliCover& a1, const AnnuliCover& ai,
                                         bool real_poly) {
  using detail::empty;
  using detail::isect;
  const auto r0 = detail::radial_ranges(a0), r1 = detail::radial_ranges(a1), ri = detail::radial_ranges(ai);
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<CoverDisc> out;
  for (const auto& [a1lo, a2hi] : r0) {
    const Interval A{a1lo, a2hi}, A2 = sqr(A);
    for (const auto& [b1lo, b2hi] : r1) {
      const Interval B{b1lo, b2hi}, B2 = sqr(B);
      // |z|^2 - |z - 1|^2 = 2x - 1
      const Interval two_x = A2 - B2 + Interval::point(1.0);
      Interval x{Interval::down(0.5 * two_x.lo), Interval::up(0.5 * two_x.hi)};
      x = isect(x, {-A.hi, A.hi});
      x = isect(x, Interval{Interval::down(1.0 - B.hi), Interval::up(1.0 + B.hi)});
      if (empty(x)) continue;
      const Interval xm1 = x - Interval::point(1.0);
      // y^2 bounds from both rings.
      const Interval x2 = sqr(x), xm12 = sqr(xm1);
      const double yhi2 = std::min(Interval::up(A2.hi - x2.lo), Interval::up(B2.hi - xm12.lo));
      const double ylo2 = std::max({0.0, Interval::down(A2.lo - x2.hi), Interval::down(B2.lo - xm12.hi)});
      if (yhi2 < 0.0 || ylo2 > yhi2) continue;
      const double yhi = sqrt(Interval::point(yhi2)).hi;
      const double ylo = ylo2 > 0.0 ? sqrt(Interval::point(ylo2)).lo : 0.0;
      std::vector<CoverDisc> cand;
      if (ylo <= 0.0) {
        cand.push_back(detail::enclose(x, {-yhi, yhi}));
      } else {
        cand.push_back(detail::enclose(x, {ylo, yhi}));
        cand.push_back(detail::enclose(x, {-yhi, -ylo}));
      }
      for (const auto& d : cand) {
        if (!(d.radius < inf)) {
          out.push_back(d);
          continue;
        }
        if (!detail::meets_some_ring(d, ri, 0.0, 1.0)) continue;
        if (real_poly && !detail::meets_some_ring({d.re, -d.im, d.radius}, ri, 0.0, 1.0)) continue;
        out.push_back(d);
      }
    }
  }
  return out;
}

// The cover disc may meet the region (false means it certainly does not).
inline bool may_meet(const CoverDisc& d, const Region& b) {
  const Interval x = b.re_interval(), y = b.im_interval();
  const double gx = std::max({0.0, Interval::down(x.lo - d.re), Interval::down(d.re - x.hi)});
  const double gy = std::max({0.0, Interval::down(y.lo - d.im), Interval::down(d.im - y.hi)});
  const double lo2 = Interval::down(Interval::down(gx * gx) + Interval::down(gy * gy));
  return lo2 <= Interval::up(d.radius * d.radius);
}

// Exclusion test for a box: 0 means no root in B.
inline TestResult cc_zero(const Region& b, const IntPolynomial& p, const std::vector<CoverDisc>& discs,
                          const AnnuliCover& a0, PelletCounters* counters = nullptr) {
  bool any = false;
  for (const auto& d : discs)
    if (may_meet(d, b)) {
      any = true;
      break;
    }
  if (!any) return {0, false};
  // Shortcut along the real axis: a real root in 2(B n R) lies in 2B.
  if (p.is_real() && b.bottom() <= Dyadic() && Dyadic() <= b.top() && !(b.left() <= Dyadic() && Dyadic() <= b.right())) {
    if (real_annuli_counts(a0, b.left(), b.right()).ge1 >= 1) return {-1, false};
  }
  return {t_zero(b.covering_disc(), p, counters), true};
}

struct Cluster {
  Dyadic re;
  Dyadic im;
  Dyadic radius;
  int multiplicity = 0;
};

struct ComplexClustering {
  std::vector<Cluster> clusters;  // sorted by (re, im)
  RunStats stats;
};

// Clusters all complex roots of P into pairwise disjoint discs of radius at
// most eps; each disc D and its 3-dilation hold the same number m of roots.
inline ComplexClustering cluster_complex(const IntPolynomial& p, const Dyadic& eps, const SolverOptions& opt = {}) {
  if (p.is_zero()) throw std::invalid_argument("cluster_complex: zero polynomial");
  if (eps.sign() <= 0) throw std::invalid_argument("cluster_complex: epsilon must be positive");
  detail::Stopwatch total;
  ComplexClustering out;
  RunStats& st = out.stats;
  PelletCounters pc;
  detail::HookGate gate(opt.hooks);
  const std::size_t d = p.degree();
  if (d == 0) {
    st.t_total = total.seconds();
    return out;
  }
  const bool radii = opt.mode == Mode::radii;
  const IntPolynomial dp = p.derivative();

  AnnuliCover a0, a1, ai;
  std::vector<CoverDisc> discs;
  if (radii) {
    detail::Stopwatch t;
    const mpq_class delta = opt.delta.value_or(mpq_class(1, static_cast<unsigned long>(d * d)));
    a0 = build_annuli_cover(solve_rrc(p, GaussInt(0), delta), p);
    a1 = build_annuli_cover(solve_rrc(p, GaussInt(1), delta), p);
    ai = build_annuli_cover(solve_rrc(p, GaussInt::i(), delta), p);
    discs = disc_cover(a0, a1, ai, p.is_real());
    st.t_radii = t.seconds();
  }
  auto exclude = [&](const Region& b) -> TestResult {
    if (radii) return cc_zero(b, p, discs, a0, &pc);
    return {t_zero(b.covering_disc(), p, &pc), true};
  };

  const Dyadic R = fujiwara_bound(p);
  std::vector<detail::Component> active(1);
  active[0].regions = {Region::box(Dyadic(), Dyadic(), R.mul_2exp(1))};
  std::vector<Region> solved;
  std::atomic<long> ann_excl{0};

  while (!active.empty()) {
    ++st.tree_depth;
    std::vector<detail::Component> keep, split;
    // Decided before any component is moved out of the active list.
    std::vector<char> isolated(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Region bc = detail::enclosing_region(active[i]);
      isolated[i] = detail::disc_is_isolated(Disc{bc.re, bc.im, bc.width + bc.width.mul_2exp(1)}, active, i, solved);
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      detail::Component& c = active[i];
      const Region bc = detail::enclosing_region(c);
      const Dyadic w = bc.width;
      if (!isolated[i]) {
        split.push_back(std::move(c));
        continue;
      }
      if (c.m < 0) {
        const Disc d2{bc.re, bc.im, (w + w.mul_2exp(1)).mul_2exp(-1)};
        const int m = t_star(d2, p, &pc);
        gate.test(TestKind::counting, bc.dilate_pow2(1), m, true);
        if (m == 0) continue;
        c.m = m;
        c.stable = 0;
      } else {
        ++c.stable;
      }
      if (c.m > 0 && bc.cover_radius() <= eps) {
        const Disc mine = bc.covering_disc();
        bool clear = true;
        for (const auto& s : out.clusters)
          if (discs_meet(mine, Disc{s.re, s.im, s.radius})) clear = false;
        if (clear) {
          out.clusters.push_back({bc.re, bc.im, mine.radius, c.m});
          solved.push_back(bc);
          continue;
        }
      }
      if (c.m > 0 && c.stable >= 4) {
        ++st.n_newton_attempts;
        const Dyadic wn = w.mul_2exp(-c.log2_newton);
        auto z = detail::newton_step(p, dp, bc.re, bc.im, c.m, detail::newton_precision(p, bc.re, bc.im, wn, c.m));
        if (z) {
          const Dyadic g = wn.mul_2exp(-2);
          const Dyadic zr = detail::round_to_grid(z->first, g), zi = detail::round_to_grid(z->second, g);
          const Disc target{zr, zi, wn.mul_2exp(-1)};
          bool ok = false;
          if (disc_inside(target, Disc{bc.re, bc.im, (w + w.mul_2exp(1)).mul_2exp(-1)}))
            ok = t_star(target, p, &pc) == c.m;
          gate.newton(target, c.m, ok);
          if (ok) {
            ++st.n_newton_accepted;
            c.regions = {Region::box(zr, zi, wn, bc.depth)};
            c.log2_newton *= 2;
            keep.push_back(std::move(c));
            continue;
          }
        }
        c.log2_newton = std::max(2, c.log2_newton / 2);
      }
      split.push_back(std::move(c));
    }

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
        // The root count carries over when the component did not split.
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

  std::sort(out.clusters.begin(), out.clusters.end(), [](const Cluster& a, const Cluster& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  st.n_annuli_excluded = ann_excl.load();
  st.n_t0 = pc.n_t0.load();
  st.n_tstar = pc.n_tstar.load();
  st.t_total = total.seconds();
  return out;
}

}  // namespace rootradii
