#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rootradii/dyadic.hpp"
#include "rootradii/int_polynomial.hpp"

namespace rootradii {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline mpz_class parse_integer(const std::string& s, std::size_t line) {
  mpz_class z;
  std::size_t start = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos ||
      z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw parse_error("line " + std::to_string(line) + ": bad integer '" + s + "'");
  return z;
}

}  // namespace detail

// Text format: first line d, then d+1 lines "j re [im]".
inline IntPolynomial read_polynomial(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](std::vector<std::string>& toks) {
    while (std::getline(in, line)) {
      ++lineno;
      toks.clear();
      std::istringstream ls(line);
      for (std::string t; ls >> t;) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<std::string> toks;
  if (!next(toks)) throw parse_error("empty polynomial input");
  if (toks.size() != 1) throw parse_error("line " + std::to_string(lineno) + ": expected the degree");
  mpz_class dz = detail::parse_integer(toks[0], lineno);
  if (dz < 0 || !dz.fits_slong_p() || dz > 1'000'000) throw parse_error("degree out of range");
  const std::size_t d = dz.get_ui();
  std::vector<GaussInt> c(d + 1);
  std::vector<bool> seen(d + 1, false);
  for (std::size_t k = 0; k <= d; ++k) {
    if (!next(toks)) throw parse_error("expected " + std::to_string(d + 1) + " coefficient lines");
    if (toks.size() < 2 || toks.size() > 3)
      throw parse_error("line " + std::to_string(lineno) + ": expected 'j re [im]'");
    mpz_class j = detail::parse_integer(toks[0], lineno);
    if (j < 0 || j > dz) throw parse_error("line " + std::to_string(lineno) + ": index out of range");
    const std::size_t ji = j.get_ui();
    if (seen[ji]) throw parse_error("line " + std::to_string(lineno) + ": duplicate index");
    seen[ji] = true;
    c[ji] = GaussInt(detail::parse_integer(toks[1], lineno),
                     toks.size() == 3 ? detail::parse_integer(toks[2], lineno) : mpz_class(0));
  }
  if (next(toks)) throw parse_error("line " + std::to_string(lineno) + ": trailing content");
  IntPolynomial p(c);
  if (p.degree() != d || p.is_zero()) throw parse_error("leading coefficient must be nonzero");
  return p;
}

inline IntPolynomial parse_polynomial(const std::string& text) {
  std::istringstream in(text);
  return read_polynomial(in);
}

inline void write_polynomial(std::ostream& out, const IntPolynomial& p) {
  out << p.degree() << '\n';
  for (std::size_t j = 0; j < p.size(); ++j) {
    out << j << ' ' << p[j].re.get_str();
    if (p[j].im != 0) out << ' ' << p[j].im.get_str();
    out << '\n';
  }
}

inline std::string format_polynomial(const IntPolynomial& p) {
  std::ostringstream os;
  write_polynomial(os, p);
  return os.str();
}

// "num den" of a dyadic.
inline std::string num_den(const Dyadic& x) { return x.numerator().get_str() + " " + x.denominator().get_str(); }

// Positive rational "a/b" or integer "a".
inline mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  const auto slash = s.find('/');
  mpz_class num = detail::parse_integer(s.substr(0, slash), 0);
  mpz_class den = slash == std::string::npos ? mpz_class(1) : detail::parse_integer(s.substr(slash + 1), 0);
  if (den == 0) throw parse_error("zero denominator in '" + s + "'");
  q = mpq_class(num, den);
  q.canonicalize();
  return q;
}

// Dyadic from "a/2^k", "2^-k", "a/b" with b a power of two, or an integer.
inline Dyadic parse_dyadic(const std::string& s) {
  if (s.rfind("2^", 0) == 0) {
    mpz_class e = detail::parse_integer(s.substr(2), 0);
    if (!e.fits_slong_p()) throw parse_error("exponent out of range in '" + s + "'");
    return Dyadic::pow2(e.get_si());
  }
  const auto slash = s.find('/');
  if (slash != std::string::npos && s.compare(slash + 1, 2, "2^") == 0) {
    mpz_class a = detail::parse_integer(s.substr(0, slash), 0);
    mpz_class k = detail::parse_integer(s.substr(slash + 3), 0);
    if (!k.fits_slong_p()) throw parse_error("exponent out of range in '" + s + "'");
    return Dyadic(a, -k.get_si());
  }
  mpq_class q = parse_rational(s);
  const mpz_class& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) throw parse_error("'" + s + "' is not a dyadic number");
  return Dyadic(q.get_num(), -static_cast<std::int64_t>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1));
}

}  // namespace rootradii
