#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "rootradii/dyadic.hpp"
#include "rootradii/mpball.hpp"

namespace rootradii {

struct GaussInt {
  mpz_class re;
  mpz_class im;

  GaussInt() = default;
  GaussInt(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussInt(mpz_class r, mpz_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussInt(long r, long i) : re(r), im(i) {}

  static GaussInt i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  mpz_class norm() const { return re * re + im * im; }

  GaussInt operator-() const { return {-re, -im}; }
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

// Polynomial with Gaussian-integer coefficients, coefficient j of x^j.
// The representation is trimmed: the leading coefficient is nonzero unless
// the polynomial is zero, in which case the coefficient list is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<GaussInt> c) : c_(std::move(c)) { trim(); }
  explicit IntPolynomial(const std::vector<mpz_class>& c) {
    c_.reserve(c.size());
    for (const auto& v : c) c_.emplace_back(v);
    trim();
  }
  IntPolynomial(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial monomial(std::size_t d, GaussInt c = GaussInt(1)) {
    std::vector<GaussInt> v(d + 1);
    v[d] = std::move(c);
    return IntPolynomial(std::move(v));
  }
  // x - r
  static IntPolynomial linear(const GaussInt& r) { return IntPolynomial(std::vector<GaussInt>{-r, GaussInt(1)}); }

  bool is_zero() const { return c_.empty(); }
  // Degree; 0 for the zero polynomial.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  std::size_t size() const { return c_.size(); }
  const GaussInt& operator[](std::size_t j) const { return c_[j]; }
  const GaussInt& leading() const { return c_.back(); }
  const std::vector<GaussInt>& coeffs() const { return c_; }

  bool is_real() const {
    return std::all_of(c_.begin(), c_.end(), [](const GaussInt& g) { return g.is_real(); });
  }

  // Multiplicity of the root at 0.
  std::size_t trailing_zeros() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return k;
  }

  // Divide by x^k (the k low coefficients must vanish).
  IntPolynomial shift_down(std::size_t k) const {
    if (k == 0) return *this;
    return IntPolynomial(std::vector<GaussInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  // ceil(log2 max_j |P_j|); 0 for the zero polynomial.
  long bitsize() const {
    mpz_class n = 0;
    for (const auto& g : c_) n = std::max(n, g.norm());
    if (n <= 1) return 0;
    mpz_class m = n - 1;
    long b = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
    return (b + 1) / 2;
  }

  GaussInt eval(const GaussInt& z) const {
    GaussInt acc;
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * z + c_[j];
    return acc;
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussInt> v(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) {
      mpz_class k(static_cast<unsigned long>(j));
      v[j - 1] = GaussInt(c_[j].re * k, c_[j].im * k);
    }
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussInt> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    return IntPolynomial(std::move(v));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<GaussInt> c_;
};

namespace detail {

// In-place Horner Taylor shift of coefficient vectors (re, im) by A + iB.
inline void taylor_shift_inplace(std::vector<mpz_class>& re, std::vector<mpz_class>& im, const mpz_class& a,
                                 const mpz_class& b) {
  const std::size_t n = re.size();
  if (n < 2) return;
  const bool has_im = !im.empty();
  const bool a_zero = a == 0;
  const bool a_ui = a.fits_ulong_p() && !a_zero;
  const unsigned long a_u = a_ui ? a.get_ui() : 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      if (a_ui) {
        mpz_addmul_ui(re[j].get_mpz_t(), re[j + 1].get_mpz_t(), a_u);
        if (has_im) mpz_addmul_ui(im[j].get_mpz_t(), im[j + 1].get_mpz_t(), a_u);
      } else if (!a_zero) {
        mpz_addmul(re[j].get_mpz_t(), re[j + 1].get_mpz_t(), a.get_mpz_t());
        if (has_im) mpz_addmul(im[j].get_mpz_t(), im[j + 1].get_mpz_t(), a.get_mpz_t());
      }
      if (has_im && b != 0) {
        mpz_submul(re[j].get_mpz_t(), im[j + 1].get_mpz_t(), b.get_mpz_t());
        mpz_addmul(im[j].get_mpz_t(), re[j + 1].get_mpz_t(), b.get_mpz_t());
      }
    }
  }
}

}  // namespace detail

// P(c + x), exactly.
inline IntPolynomial taylor_shift(const IntPolynomial& p, const GaussInt& c) {
  const std::size_t n = p.size();
  std::vector<mpz_class> re(n), im;
  const bool complex = !p.is_real() || !c.is_real();
  if (complex) im.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = p[j].re;
    if (complex) im[j] = p[j].im;
  }
  detail::taylor_shift_inplace(re, im, c.re, c.im);
  std::vector<GaussInt> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = GaussInt(std::move(re[j]), complex ? std::move(im[j]) : mpz_class(0));
  return IntPolynomial(std::move(out));
}

// Integer coefficient vectors of a positive multiple of P(c + r x), where
// c = cre + i cim and r > 0 are dyadic. im is empty when the result is real.
struct ScaledShift {
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
  bool is_real() const { return im.empty(); }
};

inline ScaledShift shift_scale(const IntPolynomial& p, const Dyadic& cre, const Dyadic& cim, const Dyadic& r) {
  const std::size_t n = p.size();
  const std::size_t d = p.degree();
  std::int64_t e = r.exponent();
  if (!cre.is_zero()) e = std::min(e, cre.exponent());
  if (!cim.is_zero()) e = std::min(e, cim.exponent());
  const mpz_class a = cre.scaled_to(e), b = cim.scaled_to(e), rho = r.scaled_to(e);

  ScaledShift s;
  const bool complex = !p.is_real() || b != 0;
  s.re.resize(n);
  if (complex) s.im.resize(n);
  // S(y) = P(2^e y), times 2^(-e d) when e < 0 to keep integer coefficients.
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t sh = e >= 0 ? e * static_cast<std::int64_t>(j) : -e * static_cast<std::int64_t>(d - j);
    mpz_mul_2exp(s.re[j].get_mpz_t(), p[j].re.get_mpz_t(), static_cast<mp_bitcnt_t>(sh));
    if (complex) mpz_mul_2exp(s.im[j].get_mpz_t(), p[j].im.get_mpz_t(), static_cast<mp_bitcnt_t>(sh));
  }
  detail::taylor_shift_inplace(s.re, s.im, a, b);
  if (rho != 1) {
    mpz_class pw = 1;
    for (std::size_t j = 1; j < n; ++j) {
      pw *= rho;
      s.re[j] *= pw;
      if (complex) s.im[j] *= pw;
    }
  }
  return s;
}

// Upper bound on the moduli of all roots: 2 max_j |P_{d-j}/P_d|^(1/j), with
// the j = d term halved. Returns 1 when every root is 0.
inline Dyadic fujiwara_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("fujiwara_bound: zero polynomial");
  const std::size_t d = p.degree();
  if (d == 0 || p.trailing_zeros() == d) return Dyadic(1);
  detail::ensure_mpfr_range();
  mpfr_t lc, num, t, best;
  mpfr_inits2(64, lc, num, t, best, static_cast<mpfr_ptr>(nullptr));
  auto modulus = [](mpfr_t out, const GaussInt& g, mpfr_rnd_t rnd) {
    mpz_class n = g.norm();
    mpfr_set_z(out, n.get_mpz_t(), rnd);
    mpfr_sqrt(out, out, rnd);
  };
  modulus(lc, p.leading(), MPFR_RNDD);
  mpfr_set_zero(best, 1);
  for (std::size_t j = 1; j <= d; ++j) {
    const GaussInt& c = p[d - j];
    if (c.is_zero()) continue;
    modulus(num, c, MPFR_RNDU);
    mpfr_div(t, num, lc, MPFR_RNDU);
    if (j == d) mpfr_div_2ui(t, t, 1, MPFR_RNDU);
    mpfr_rootn_ui(t, t, static_cast<unsigned long>(j), MPFR_RNDU);
    mpfr_max(best, best, t, MPFR_RNDU);
  }
  mpfr_mul_2ui(best, best, 1, MPFR_RNDU);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), best);
  mpfr_clears(lc, num, t, best, static_cast<mpfr_ptr>(nullptr));
  return Dyadic(m, static_cast<std::int64_t>(e));
}

}  // namespace rootradii
