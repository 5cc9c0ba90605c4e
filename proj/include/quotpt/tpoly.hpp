#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "quotpt/rat.hpp"

namespace quotpt {

/// Laurent polynomial in the equivariant parameter t with rational
/// coefficients. Zero coefficients are never stored.
class TPoly {
 public:
  using Terms = std::map<int, Rat>;

  TPoly() = default;
  TPoly(const Rat& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(0, c);
  }
  TPoly(long c) : TPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static TPoly monomial(const Rat& c, int exp) {
    TPoly p;
    if (c != 0) p.terms_.emplace(exp, c);
    return p;
  }
  static TPoly t(int exp = 1) { return monomial(Rat(1), exp); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  int min_exp() const { return require_nonzero().begin()->first; }
  int max_exp() const { return require_nonzero().rbegin()->first; }

  /// Adds c*t^exp in place.
  void add_term(int exp, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TPoly& operator+=(const TPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  TPoly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator-(TPoly a) {
    for (auto& kv : a.terms_) kv.second = -kv.second;
    return a;
  }
  friend TPoly operator*(TPoly a, const Rat& s) { return a *= s; }
  friend TPoly operator*(const Rat& s, TPoly a) { return a *= s; }

  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  /// Multiplies by t^k.
  TPoly shifted(int k) const {
    TPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// Integer power; negative exponents require a monomial.
  TPoly pow(long r) const {
    if (r < 0) {
      auto inv = inverse();
      if (!inv) throw std::domain_error("not invertible in Q[t, t^-1]");
      return inv->pow(-r);
    }
    if (is_monomial()) {
      const auto& [e, c] = *terms_.begin();
      return monomial(rat_pow(c, r), static_cast<int>(e * r));
    }
    TPoly result(1), base = *this;
    while (r > 0) {
      if (r & 1) result *= base;
      r >>= 1;
      if (r > 0) base *= base;
    }
    return result;
  }

  /// Units of Q[t, t^-1] are exactly the nonzero monomials.
  std::optional<TPoly> inverse() const {
    if (!is_monomial()) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    return monomial(1 / c, -e);
  }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  /// "c*t^k" terms sorted by exponent, joined with " + " / " - ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat mag = c;
      if (first) {
        if (c < 0) {
          out += "-";
          mag = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) mag = -c;
      }
      out += mag.get_str();
      if (e != 0) out += "*t^" + std::to_string(e);
      first = false;
    }
    return out;
  }

 private:
  const Terms& require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("zero TPoly has no exponent range");
    return terms_;
  }

  Terms terms_;
};

}  // namespace quotpt
