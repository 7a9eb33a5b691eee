#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "rootradii/dyadic.hpp"
#include "rootradii/int_polynomial.hpp"
#include "rootradii/pellet.hpp"
#include "rootradii/region.hpp"

namespace rootradii {

enum class Mode { classic, radii };

enum class TestKind { exclusion, counting };

struct RunStats {
  long n_t0 = 0;
  long n_tstar = 0;
  long n_annuli_excluded = 0;  // exclusions decided by the annuli alone
  long n_annuli_counted = 0;   // counts decided by the annuli alone
  double t_radii = 0.0;        // seconds spent computing covers
  double t_total = 0.0;
  int tree_depth = 0;
  long boxes_visited = 0;
  long n_newton_attempts = 0;
  long n_newton_accepted = 0;
};

// Observers for tests and tracing. on_test receives the region B whose test
// ran, the result and whether a Pellet test produced it (false when the annuli
// decided). Calls are serialized.
struct SolverHooks {
  std::function<void(TestKind, const Region&, int, bool)> on_test;
  std::function<void(const Disc&, int, bool)> on_newton;
};

struct SolverOptions {
  Mode mode = Mode::radii;
  std::optional<mpq_class> delta;  // relative radii precision, default d^-2
  unsigned threads = 1;
  SolverHooks hooks;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs f(i) for i < n on up to `threads` workers.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned k = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
    });
  for (auto& th : pool) th.join();
}

// Same-width regions grouped by adjacency, with the bookkeeping for counts
// and Newton steps.
struct Component {
  std::vector<Region> regions;
  int m = -1;          // root count of the enclosing test disc, -1 if unknown
  int stable = 0;      // consecutive rounds with that count
  int log2_newton = 2; // Newton factor N = 2^log2_newton
};

inline Rect bounding_rect(const std::vector<Region>& rs) {
  Rect r = Rect::of(rs.front());
  for (std::size_t i = 1; i < rs.size(); ++i) r.extend(Rect::of(rs[i]));
  return r;
}

// Smallest region of the component's kind containing every member: the
// segment hull, or the square sharing the bounding rectangle's center.
inline Region enclosing_region(const Component& c) {
  const Rect r = bounding_rect(c.regions);
  const Dyadic cx = (r.x1 + r.x2).mul_2exp(-1);
  if (!c.regions.front().is_box()) return Region::segment(cx, r.x2 - r.x1, c.regions.front().depth);
  const Dyadic cy = (r.y1 + r.y2).mul_2exp(-1);
  const Dyadic wx = r.x2 - r.x1, wy = r.y2 - r.y1;
  return Region::box(cx, cy, wx < wy ? wy : wx, c.regions.front().depth);
}

// Exact integer (x - origin) / w for a multiple of w.
inline long lattice_index(const Dyadic& x, const Dyadic& origin, const Dyadic& w) {
  mpq_class q = (x - origin).to_mpq() / w.to_mpq();
  q.canonicalize();
  return q.get_num().get_si();
}

// Connected components of same-width regions; touching edges or corners connect.
inline std::vector<std::vector<Region>> connected_groups(const std::vector<Region>& rs) {
  std::vector<std::vector<Region>> out;
  if (rs.empty()) return out;
  const Dyadic& w = rs.front().width;
  std::map<std::pair<long, long>, std::size_t> at;
  std::vector<std::pair<long, long>> key(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    key[i] = {lattice_index(rs[i].re, rs.front().re, w), lattice_index(rs[i].im, rs.front().im, w)};
    at[key[i]] = i;
  }
  std::vector<bool> seen(rs.size(), false);
  for (std::size_t s = 0; s < rs.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Region> group;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      group.push_back(rs[i]);
      for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy) {
          auto it = at.find({key[i].first + dx, key[i].second + dy});
          if (it != at.end() && !seen[it->second]) {
            seen[it->second] = true;
            stack.push_back(it->second);
          }
        }
    }
    out.push_back(std::move(group));
  }
  return out;
}

// True when the disc meets none of the other components and none of the
// regions already returned as solutions.
inline bool disc_is_isolated(const Disc& d, const std::vector<Component>& comps, std::size_t self,
                             const std::vector<Region>& solved) {
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j == self || comps[j].regions.empty()) continue;
    if (!disc_meets_rect(d, bounding_rect(comps[j].regions))) continue;
    for (const auto& r : comps[j].regions)
      if (disc_meets_region(d, r)) return false;
  }
  for (const auto& r : solved)
    if (disc_meets_region(d, r)) return false;
  return true;
}

inline Dyadic mpfr_to_dyadic(const mpfr_t x) {
  if (mpfr_zero_p(x)) return {};
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  return Dyadic(m, e);
}

// Nearest multiple of g (g > 0).
inline Dyadic round_to_grid(const Dyadic& x, const Dyadic& g) {
  mpq_class q = x.to_mpq() / g.to_mpq() + mpq_class(1, 2);
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Dyadic(k, 0) * g;
}

// One Newton step z - m P(z) / P'(z) in floating point. Returns nothing when
// P'(z) vanishes numerically. The result is only a candidate; callers verify.
inline std::optional<std::pair<Dyadic, Dyadic>> newton_step(const IntPolynomial& p, const IntPolynomial& dp,
                                                            const Dyadic& zr, const Dyadic& zi, int m, long prec) {
  mpfr_prec_t pr = static_cast<mpfr_prec_t>(std::max<long>(prec, MPFR_PREC_MIN));
  mpfr_t xr, xi, vr, vi, wr, wi, t1, t2;
  for (mpfr_ptr v : {xr, xi, vr, vi, wr, wi, t1, t2}) mpfr_init2(v, pr);
  mpfr_set_z_2exp(xr, zr.mantissa().get_mpz_t(), zr.exponent(), MPFR_RNDN);
  mpfr_set_z_2exp(xi, zi.mantissa().get_mpz_t(), zi.exponent(), MPFR_RNDN);
  // Horner in complex arithmetic: v = v * x + c.
  auto horner = [&](const IntPolynomial& q, mpfr_t ar, mpfr_t ai) {
    mpfr_set_zero(ar, 1);
    mpfr_set_zero(ai, 1);
    for (std::size_t j = q.size(); j-- > 0;) {
      mpfr_mul(t1, ar, xr, MPFR_RNDN);
      mpfr_mul(t2, ai, xi, MPFR_RNDN);
      mpfr_sub(t1, t1, t2, MPFR_RNDN);
      mpfr_mul(t2, ar, xi, MPFR_RNDN);
      mpfr_fma(ai, ai, xr, t2, MPFR_RNDN);
      mpfr_add_z(ar, t1, q[j].re.get_mpz_t(), MPFR_RNDN);
      mpfr_add_z(ai, ai, q[j].im.get_mpz_t(), MPFR_RNDN);
    }
  };
  horner(p, vr, vi);
  horner(dp, wr, wi);
  std::optional<std::pair<Dyadic, Dyadic>> out;
  // v / w = v conj(w) / |w|^2
  mpfr_sqr(t1, wr, MPFR_RNDN);
  mpfr_fma(t1, wi, wi, t1, MPFR_RNDN);
  if (!mpfr_zero_p(t1) && mpfr_number_p(t1)) {
    mpfr_t qr, qi;
    mpfr_init2(qr, pr);
    mpfr_init2(qi, pr);
    mpfr_mul(qr, vr, wr, MPFR_RNDN);
    mpfr_fma(qr, vi, wi, qr, MPFR_RNDN);
    mpfr_mul(qi, vi, wr, MPFR_RNDN);
    mpfr_mul(t2, vr, wi, MPFR_RNDN);
    mpfr_sub(qi, qi, t2, MPFR_RNDN);
    mpfr_div(qr, qr, t1, MPFR_RNDN);
    mpfr_div(qi, qi, t1, MPFR_RNDN);
    mpfr_mul_si(qr, qr, m, MPFR_RNDN);
    mpfr_mul_si(qi, qi, m, MPFR_RNDN);
    mpfr_sub(qr, xr, qr, MPFR_RNDN);
    mpfr_sub(qi, xi, qi, MPFR_RNDN);
    if (mpfr_number_p(qr) && mpfr_number_p(qi)) out.emplace(mpfr_to_dyadic(qr), mpfr_to_dyadic(qi));
    mpfr_clear(qr);
    mpfr_clear(qi);
  }
  for (mpfr_ptr v : {xr, xi, vr, vi, wr, wi, t1, t2}) mpfr_clear(v);
  return out;
}

// Working precision for a Newton step near z aiming at width w. Near a
// cluster of m roots P(z) is about w^m, so the cancellation grows with m.
inline long newton_precision(const IntPolynomial& p, const Dyadic& zr, const Dyadic& zi, const Dyadic& w, int m) {
  const double az = std::max(std::fabs(zr.to_double()), std::fabs(zi.to_double()));
  const double lz = std::isfinite(az) ? std::log2(2.0 + az) : 64.0;
  const double lw = -static_cast<double>(w.exponent()) - std::log2(std::max(1.0, w.mantissa().get_d()));
  return 64 + p.bitsize() + static_cast<long>(std::ceil(static_cast<double>(p.degree()) * lz)) +
         m * std::max(0L, static_cast<long>(std::ceil(lw)));
}

// Serializes hook calls from worker threads.
class HookGate {
 public:
  explicit HookGate(const SolverHooks& h) : hooks_(h) {}

  void test(TestKind kind, const Region& r, int result, bool pellet) {
    if (!hooks_.on_test) return;
    std::lock_guard<std::mutex> lock(mu_);
    hooks_.on_test(kind, r, result, pellet);
  }
  void newton(const Disc& d, int m, bool ok) {
    if (!hooks_.on_newton) return;
    std::lock_guard<std::mutex> lock(mu_);
    hooks_.on_newton(d, m, ok);
  }

 private:
  const SolverHooks& hooks_;
  std::mutex mu_;
};

}  // namespace detail
}  // namespace rootradii
