#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quotpt/rat.hpp"

namespace quotpt {

/// Dense univariate polynomial over Q; coefficient i multiplies q^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static RatPoly constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }
  static RatPoly monomial(const Rat& c, int exp) {
    std::vector<Rat> v(static_cast<std::size_t>(exp) + 1);
    v.back() = c;
    return RatPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[static_cast<std::size_t>(i)];
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  /// Lowest exponent with a nonzero coefficient.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    throw std::domain_error("valuation of the zero polynomial");
  }
  /// Divides by q^k; requires q^k | this.
  RatPoly unshifted(int k) const {
    for (int i = 0; i < k; ++i)
      if (coeff(i) != 0) throw std::domain_error("unshift would drop a nonzero coefficient");
    return RatPoly(std::vector<Rat>(c_.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(c_.size())), c_.end()));
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
  }
  friend RatPoly operator-(const RatPoly& a) {
    RatPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
  }
  friend RatPoly operator*(const Rat& s, const RatPoly& a) { return constant(s) * a; }

  RatPoly pow(unsigned long e) const {
    RatPoly result = constant(1), base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = c_;
    const int dd = d.degree();
    const Rat lead_inv = 1 / d.c_.back();
    std::vector<Rat> quo(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
      const Rat f = rem[static_cast<std::size_t>(i)] * lead_inv;
      if (f == 0) continue;
      quo[static_cast<std::size_t>(i - dd)] = f;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
  }

  /// Exact quotient; throws when d does not divide this.
  RatPoly exact_div(const RatPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (1 / a.coeffs().back()) * a;
}

}  // namespace quotpt
