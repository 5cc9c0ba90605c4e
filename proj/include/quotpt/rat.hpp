#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quotpt {

/// Exact rational number. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const std::string& num, const std::string& den) {
  Rat r{BigInt(num), BigInt(den)};
  if (r.get_den() == 0) throw std::domain_error("zero denominator");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Integer power with a possibly negative exponent.
inline Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Rat inv = 1 / base;
    return rat_pow(inv, -exp);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for any
/// integer n so that binomial expansions hold for negative exponents.
inline Rat binomial(long n, long k) {
  if (k < 0) throw std::invalid_argument("binomial: negative lower index");
  BigInt r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    if (k % 2 != 0) r = -r;
  }
  return Rat(r);
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace quotpt
