#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quotpt/tpoly.hpp"

namespace quotpt {

/// Truncated Laurent series in q with TPoly coefficients. Coefficients of
/// q^k are exact for min_exp <= k <= order, zero below min_exp and unknown
/// above order. Binary operations keep the smaller of the operands' orders.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int min_exp, int order) : min_exp_(min_exp), order_(order) {
    if (order >= min_exp) coeffs_.resize(static_cast<std::size_t>(order - min_exp + 1));
  }

  static QSeries one(int order) {
    QSeries s(0, order);
    if (order >= 0) s.coeffs_[0] = TPoly(1);
    return s;
  }
  static QSeries from_terms(const std::map<int, TPoly>& terms, int order) {
    int lo = terms.empty() ? 0 : terms.begin()->first;
    QSeries s(std::min(lo, order + 1), order);
    for (const auto& [k, c] : terms)
      if (k <= order) s.set(k, c);
    return s;
  }

  int min_exp() const { return min_exp_; }
  int order() const { return order_; }

  const TPoly& coeff(int k) const {
    static const TPoly kZero;
    if (k > order_) throw std::out_of_range("coefficient beyond truncation order");
    if (k < min_exp_) return kZero;
    return coeffs_[static_cast<std::size_t>(k - min_exp_)];
  }
  void set(int k, TPoly c) {
    if (k > order_ || k < min_exp_) throw std::out_of_range("coefficient outside stored range");
    coeffs_[static_cast<std::size_t>(k - min_exp_)] = std::move(c);
  }

  /// Lowest exponent carrying a nonzero coefficient, if any within order.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return min_exp_ + static_cast<int>(i);
    return std::nullopt;
  }

  QSeries truncated(int order) const {
    int o = std::min(order, order_);
    QSeries r(std::min(min_exp_, o + 1), o);
    for (int k = r.min_exp_; k <= o; ++k) r.set(k, coeff(k));
    return r;
  }

  /// Multiplies by q^k.
  QSeries shifted(int k) const {
    QSeries r = *this;
    r.min_exp_ += k;
    r.order_ += k;
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    const int o = std::min(a.order_, b.order_);
    QSeries r(std::min({a.min_exp_, b.min_exp_, o + 1}), o);
    for (int k = r.min_exp_; k <= o; ++k) r.set(k, a.coeff(k) + b.coeff(k));
    return r;
  }
  friend QSeries operator-(const QSeries& a) {
    QSeries r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int o = std::min({a.order_, b.order_, a.order_ + b.min_exp_, b.order_ + a.min_exp_});
    const int lo = a.min_exp_ + b.min_exp_;
    QSeries r(std::min(lo, o + 1), o);
    for (int i = a.min_exp_; i <= a.order_; ++i) {
      const TPoly& ca = a.coeff(i);
      if (ca.is_zero()) continue;
      for (int j = b.min_exp_; j <= b.order_ && i + j <= o; ++j) {
        const TPoly& cb = b.coeff(j);
        if (cb.is_zero()) continue;
        r.coeffs_[static_cast<std::size_t>(i + j - r.min_exp_)] += ca * cb;
      }
    }
    return r;
  }
  friend QSeries operator*(const TPoly& s, const QSeries& a) {
    QSeries r = a;
    for (auto& c : r.coeffs_) c = s * c;
    return r;
  }

  /// Multiplicative inverse; the lowest nonzero coefficient must be a unit
  /// of Q[t, t^-1]. An input exact through order o with valuation v yields
  /// an inverse exact through o - 2v.
  QSeries inverse() const {
    auto v = valuation();
    if (!v) throw std::domain_error("series has no invertible leading term");
    auto lead_inv = coeff(*v).inverse();
    if (!lead_inv) throw std::domain_error("leading coefficient is not a unit");
    const int len = order_ - *v;  // unit part known through q^len
    QSeries inv(0, len);
    inv.set(0, *lead_inv);
    for (int k = 1; k <= len; ++k) {
      TPoly acc;
      for (int i = 1; i <= k; ++i) acc += coeff(*v + i) * inv.coeff(k - i);
      inv.set(k, -(*lead_inv * acc));
    }
    return inv.shifted(-*v);
  }

  QSeries pow(long r) const {
    if (r < 0) return inverse().pow(-r);
    QSeries result = one(order_);
    QSeries base = *this;
    bool have = false;
    while (r > 0) {
      if (r & 1) {
        result = have ? result * base : base;
        have = true;
      }
      r >>= 1;
      if (r > 0) base = base * base;
    }
    return result;
  }

  /// Coefficientwise equality through the given exponent.
  bool equal_through(const QSeries& o, int through) const {
    if (through > order_ || through > o.order_) throw std::out_of_range("comparison beyond truncation order");
    for (int k = std::min(min_exp_, o.min_exp_); k <= through; ++k)
      if (coeff(k) != o.coeff(k)) return false;
    return true;
  }

  /// Nonzero coefficients within the known range.
  std::map<int, TPoly> terms() const {
    std::map<int, TPoly> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) out.emplace(min_exp_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  /// "c*q^k" terms in increasing exponent; multi-term coefficients are
  /// parenthesized, t-monomial coefficients rendered as "c*t^j*q^k".
  std::string to_string() const {
    auto ts = terms();
    if (ts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : ts) {
      std::string body;
      bool negative = false;
      if (c.is_monomial()) {
        auto [e, v] = *c.terms().begin();
        negative = v < 0;
        body = TPoly::monomial(negative ? Rat(-v) : v, e).to_string();
      } else {
        body = "(" + c.to_string() + ")";
      }
      if (k != 0) body += "*q^" + std::to_string(k);
      if (first) {
        out += negative ? "-" + body : body;
      } else {
        out += (negative ? " - " : " + ") + body;
      }
      first = false;
    }
    return out;
  }

 private:
  int min_exp_ = 0;
  int order_ = -1;
  std::vector<TPoly> coeffs_;
};

}  // namespace quotpt
