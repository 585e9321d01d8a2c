#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ogw {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat parse_rat(const std::string& s) {
  Rat r(s, 10);
  if (r.get_den() == 0) throw std::domain_error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(10); }
inline std::string to_string(const Int& z) { return z.get_str(10); }

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
inline Int double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial of n < -1");
  if (n <= 0) return 1;
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Generalized binomial coefficient C(a, j) for integer a (possibly negative).
inline Rat gbinomial(long a, unsigned long j) {
  Int r;
  mpz_class base(a);
  mpz_bin_ui(r.get_mpz_t(), base.get_mpz_t(), j);
  return Rat(r);
}

inline Rat pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 raised to a negative power");
    return pow(Rat(1) / base, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace ogw
