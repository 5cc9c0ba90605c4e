#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "quotpt/qseries.hpp"
#include "quotpt/ratpoly.hpp"
#include "quotpt/tpoly.hpp"

namespace quotpt {

/// Laurent polynomial in q with TPoly coefficients.
using QLaurent = std::map<int, TPoly>;

namespace detail {

inline void add_into(QLaurent& acc, int k, const TPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline QLaurent mul(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_into(r, ka + kb, ca * cb);
  return r;
}

inline QLaurent mul(const QLaurent& a, const RatPoly& p) {
  QLaurent r;
  for (const auto& [k, c] : a)
    for (int i = 0; i <= p.degree(); ++i)
      if (p.coeff(i) != 0) add_into(r, k + i, p.coeff(i) * c);
  return r;
}

inline QLaurent from_ratpoly(const RatPoly& p, int shift = 0) {
  QLaurent r;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) r.emplace(i + shift, TPoly(p.coeff(i)));
  return r;
}

}  // namespace detail

/// Exact rational function N(q)/D(q): N a Laurent polynomial with TPoly
/// coefficients, D a t-free polynomial with D(0) != 0. Kept reduced: D is
/// coprime to every t-component of N and normalized to D(0) = 1.
class QRatFun {
 public:
  QRatFun() : den_(RatPoly::constant(1)) {}
  QRatFun(const TPoly& c) : den_(RatPoly::constant(1)) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) num_.emplace(0, c);
  }
  QRatFun(QLaurent num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.coeff(0) == 0) throw std::domain_error("denominator must have a nonzero constant term");
    normalize();
  }

  static QRatFun q_power(int k, const TPoly& c = TPoly(1)) {
    QLaurent n;
    if (!c.is_zero()) n.emplace(k, c);
    return {std::move(n), RatPoly::constant(1)};
  }

  /// p(q)^e for a t-free polynomial p != 0; a factor q^v of p is split off
  /// so negative e only requires p / q^v to have nonzero constant term.
  static QRatFun ratpoly_power(const RatPoly& p, long e) {
    const int v = p.valuation();
    const RatPoly unit = p.unshifted(v);
    const int shift = static_cast<int>(v * e);
    if (e >= 0) return {detail::from_ratpoly(unit.pow(static_cast<unsigned long>(e)), shift), RatPoly::constant(1)};
    return {detail::from_ratpoly(RatPoly::constant(1), shift), unit.pow(static_cast<unsigned long>(-e))};
  }

  const QLaurent& numerator() const { return num_; }
  const RatPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.empty(); }

  friend QRatFun operator+(const QRatFun& a, const QRatFun& b) {
    QLaurent n = detail::mul(a.num_, b.den_);
    for (const auto& [k, c] : detail::mul(b.num_, a.den_)) detail::add_into(n, k, c);
    return {std::move(n), a.den_ * b.den_};
  }
  friend QRatFun operator-(const QRatFun& a) {
    QRatFun r = a;
    for (auto& kv : r.num_) kv.second = -kv.second;
    return r;
  }
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b) { return a + (-b); }
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b) {
    return {detail::mul(a.num_, b.num_), a.den_ * b.den_};
  }

  /// Integer power. Negative powers need a numerator of the form
  /// c*t^j*q^v*P(q) with P t-free and P(0) != 0.
  QRatFun pow(long r) const {
    if (r >= 0) {
      QRatFun result(TPoly(1)), base = *this;
      while (r > 0) {
        if (r & 1) result = result * base;
        r >>= 1;
        if (r > 0) base = base * base;
      }
      return result;
    }
    if (num_.empty()) throw std::domain_error("zero rational function has no inverse");
    int texp = 0;
    bool first = true;
    std::vector<Rat> coeffs;
    const int v = num_.begin()->first;
    for (const auto& [k, c] : num_) {
      if (!c.is_monomial()) throw std::domain_error("numerator is not a t-monomial multiple of a q-polynomial");
      const auto& [e, val] = *c.terms().begin();
      if (first) texp = e;
      if (e != texp) throw std::domain_error("numerator is not a t-monomial multiple of a q-polynomial");
      first = false;
      coeffs.resize(static_cast<std::size_t>(k - v + 1));
      coeffs[static_cast<std::size_t>(k - v)] = val;
    }
    RatPoly p(std::move(coeffs));
    QRatFun inv(detail::from_ratpoly(den_, -v), p);
    inv = inv * QRatFun(TPoly::t(-texp));
    return inv.pow(-r);
  }

  /// Laurent expansion exact through q^order.
  QSeries expand(int order) const {
    if (num_.empty()) return QSeries(order + 1, order);
    const int lo = num_.begin()->first;
    const int len = order - lo;
    // 1/D as a power series through q^len
    std::vector<Rat> inv(static_cast<std::size_t>(std::max(len + 1, 0)));
    if (len >= 0) {
      const Rat d0inv = 1 / den_.coeff(0);
      inv[0] = d0inv;
      for (int k = 1; k <= len; ++k) {
        Rat acc;
        for (int i = 1; i <= std::min(k, den_.degree()); ++i) acc += den_.coeff(i) * inv[static_cast<std::size_t>(k - i)];
        inv[static_cast<std::size_t>(k)] = -d0inv * acc;
      }
    }
    QSeries s(std::min(lo, order + 1), order);
    for (const auto& [k, c] : num_) {
      for (int j = 0; k + j <= order; ++j) {
        const Rat& f = inv[static_cast<std::size_t>(j)];
        if (f == 0) continue;
        s.set(k + j, s.coeff(k + j) + c * f);
      }
    }
    return s;
  }

  /// Cross-multiplied equality, independent of normalization.
  friend bool operator==(const QRatFun& a, const QRatFun& b) {
    return detail::mul(a.num_, b.den_) == detail::mul(b.num_, a.den_);
  }
  friend bool operator!=(const QRatFun& a, const QRatFun& b) { return !(a == b); }

  std::string to_string() const {
    std::string n;
    if (num_.empty()) return "0";
    QSeries as_series = QSeries::from_terms(num_, num_.rbegin()->first);
    n = as_series.to_string();
    if (den_ == RatPoly::constant(1)) return n;
    std::string d;
    for (int i = 0; i <= den_.degree(); ++i) {
      const Rat& c = den_.coeff(i);
      if (c == 0) continue;
      if (!d.empty()) d += c < 0 ? " - " : " + ";
      else if (c < 0) d += "-";
      d += Rat(abs(c)).get_str();
      if (i != 0) d += "*q^" + std::to_string(i);
    }
    return "(" + n + ")/(" + d + ")";
  }

 private:
  void normalize() {
    if (num_.empty()) {
      den_ = RatPoly::constant(1);
      return;
    }
    // Split N = q^v * sum_j t^j P_j(q) and divide out gcd(D, P_j ...).
    const int v = num_.begin()->first;
    std::map<int, std::vector<Rat>> parts;
    for (const auto& [k, c] : num_) {
      for (const auto& [e, val] : c.terms()) {
        auto& vec = parts[e];
        if (vec.size() < static_cast<std::size_t>(k - v + 1)) vec.resize(static_cast<std::size_t>(k - v + 1));
        vec[static_cast<std::size_t>(k - v)] = val;
      }
    }
    RatPoly g = den_;
    for (auto& [e, vec] : parts) {
      g = gcd(g, RatPoly(vec));
      if (g.degree() == 0) break;
    }
    if (g.degree() > 0) {
      den_ = den_.exact_div(g);
      QLaurent reduced;
      for (auto& [e, vec] : parts) {
        RatPoly q = RatPoly(vec).exact_div(g);
        for (int i = 0; i <= q.degree(); ++i)
          if (q.coeff(i) != 0) detail::add_into(reduced, v + i, TPoly::monomial(q.coeff(i), e));
      }
      num_ = std::move(reduced);
    }
    const Rat d0 = den_.coeff(0);
    if (d0 != 1) {
      const Rat s = 1 / d0;
      den_ = s * den_;
      for (auto& kv : num_) kv.second *= s;
    }
  }

  QLaurent num_;
  RatPoly den_;
};

}  // namespace quotpt
