#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rootradii/int_polynomial.hpp"

namespace rootradii {

// Bernoulli polynomial sum_k C(d,k) b_{d-k} z^k, multiplied by the lcm of
// its coefficient denominators (b_1 = -1/2 convention).
inline IntPolynomial bernoulli(std::size_t d) {
  if (d < 1) throw std::invalid_argument("bernoulli: degree must be at least 1");
  std::vector<mpq_class> b(d + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= d; ++n) {
    // sum_{k=0}^{n} C(n+1, k) b_k = 0
    mpq_class s = 0;
    mpz_class c = 1;  // C(n+1, k)
    for (std::size_t k = 0; k < n; ++k) {
      s += mpq_class(c) * b[k];
      c = c * static_cast<unsigned long>(n + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    b[n] = -s / mpq_class(c);
  }
  std::vector<mpq_class> coef(d + 1);
  mpz_class binom = 1;  // C(d, k)
  mpz_class den = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    coef[k] = mpq_class(binom) * b[d - k];
    coef[k].canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coef[k].get_den_mpz_t());
    binom = binom * static_cast<unsigned long>(d - k) / static_cast<unsigned long>(k + 1);
  }
  std::vector<mpz_class> out(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    mpq_class v = coef[k] * mpq_class(den);
    out[k] = v.get_num();
  }
  return IntPolynomial(out);
}

// prod_{i=1}^{d} (z - i)
inline IntPolynomial wilkinson(std::size_t d) {
  if (d < 1) throw std::invalid_argument("wilkinson: degree must be at least 1");
  IntPolynomial p{1};
  for (std::size_t i = 1; i <= d; ++i) p = p * IntPolynomial::linear(GaussInt(static_cast<long>(i)));
  return p;
}

// prod over -n <= a, b <= n of (z - a + i b), degree (2n+1)^2.
inline IntPolynomial grid(std::size_t n) {
  const long m = static_cast<long>(n);
  IntPolynomial p{1};
  for (long a = -m; a <= m; ++a) {
    p = p * IntPolynomial::linear(GaussInt(a));
    for (long b = 1; b <= m; ++b) p = p * IntPolynomial{a * a + b * b, -2 * a, 1};
  }
  return p;
}

// z^d - 2 (2^(tau/2 - 1) z - 1)^2 = z^d - 2^(tau-1) z^2 + 2^(tau/2+1) z - 2
inline IntPolynomial mignotte(std::size_t d, long tau) {
  if (d < 3) throw std::invalid_argument("mignotte: degree must be at least 3");
  if (tau < 4 || tau % 2 != 0) throw std::invalid_argument("mignotte: tau must be even and at least 4");
  std::vector<mpz_class> c(d + 1, 0);
  c[d] = 1;
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(tau - 1));
  c[2] -= t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(tau / 2 + 1));
  c[1] += t;
  c[0] -= 2;
  return IntPolynomial(c);
}

// Monic polynomial whose other coefficients are uniform in [-2^(tau-1), 2^(tau-1)].
// Each coefficient draws tau+1 bits from std::mt19937_64 (low word first) and
// rejects values above 2^tau, then subtracts 2^(tau-1).
inline IntPolynomial random_dense(std::size_t d, long tau, std::uint64_t seed) {
  if (d < 1 || tau < 1) throw std::invalid_argument("random_dense: need d >= 1 and tau >= 1");
  std::mt19937_64 rng(seed);
  const unsigned long bits = static_cast<unsigned long>(tau) + 1;
  const std::size_t words = (bits + 63) / 64;
  mpz_class top, half;
  mpz_ui_pow_ui(top.get_mpz_t(), 2, static_cast<unsigned long>(tau));
  mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(tau - 1));
  std::vector<mpz_class> c(d + 1);
  std::vector<std::uint64_t> draw(words);
  for (std::size_t j = 0; j < d; ++j) {
    mpz_class v;
    do {
      for (auto& x : draw) x = rng();
      mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, draw.data());
      mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    } while (v > top);
    c[j] = v - half;
  }
  c[d] = 1;
  return IntPolynomial(c);
}

// Parses family specs: bernoulli:d, wilkinson:d, grid:n, mignotte:d:tau,
// random:d:tau:seed. random:d:tau takes the seed from the argument.
inline IntPolynomial generate(const std::string& spec, std::uint64_t seed = 0) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty generator spec");
  auto num = [&](std::size_t i) -> unsigned long long {
    if (i >= parts.size()) throw std::invalid_argument("generator spec '" + spec + "': missing parameter");
    const std::string& s = parts[i];
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("generator spec '" + spec + "': bad number '" + s + "'");
    return std::stoull(s);
  };
  auto expect = [&](std::size_t n) {
    if (parts.size() != n) throw std::invalid_argument("generator spec '" + spec + "': wrong parameter count");
  };
  const std::string& f = parts[0];
  if (f == "bernoulli") {
    expect(2);
    return bernoulli(num(1));
  }
  if (f == "wilkinson") {
    expect(2);
    return wilkinson(num(1));
  }
  if (f == "grid") {
    expect(2);
    return grid(num(1));
  }
  if (f == "mignotte") {
    expect(3);
    return mignotte(num(1), static_cast<long>(num(2)));
  }
  if (f == "random") {
    if (parts.size() == 3) return random_dense(num(1), static_cast<long>(num(2)), seed);
    expect(4);
    return random_dense(num(1), static_cast<long>(num(2)), num(3));
  }
  throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace rootradii
