#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "quotpt/tpoly.hpp"

namespace quotpt {

/// Even generators of the localized equivariant ring on Quot^e E x Sym^n C:
/// the a-classes of both factors, their theta classes, and the cross class B.
enum class Gen { A1, A2, Theta1, Theta2, B };

/// Monomial a1^p1 a2^p2 theta1^j theta2^k B^l. Every generator has complex
/// degree one.
struct CohMono {
  int p1 = 0, p2 = 0, j = 0, k = 0, l = 0;

  int degree() const { return p1 + p2 + j + k + l; }

  friend CohMono operator*(const CohMono& a, const CohMono& b) {
    return {a.p1 + b.p1, a.p2 + b.p2, a.j + b.j, a.k + b.k, a.l + b.l};
  }
  friend auto operator<=>(const CohMono&, const CohMono&) = default;
  friend bool operator==(const CohMono&, const CohMono&) = default;

  static CohMono of(Gen gen, int power = 1) {
    CohMono m;
    switch (gen) {
      case Gen::A1: m.p1 = power; break;
      case Gen::A2: m.p2 = power; break;
      case Gen::Theta1: m.j = power; break;
      case Gen::Theta2: m.k = power; break;
      case Gen::B: m.l = power; break;
    }
    return m;
  }

  std::string to_string() const {
    std::string s;
    auto put = [&s](const char* name, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += name;
      if (e != 1) s += "^" + std::to_string(e);
    };
    put("a1", p1);
    put("a2", p2);
    put("th1", j);
    put("th2", k);
    put("B", l);
    return s.empty() ? "1" : s;
  }
};

/// Element of Q[t, t^-1][a1, a2, theta1, theta2, B] truncated above complex
/// degree maxdeg, with theta_i^{g+1} = 0 and B^{2g+1} = 0.
class CohClass {
 public:
  using Terms = std::map<CohMono, TPoly>;

  CohClass(int g, int maxdeg) : g_(g), maxdeg_(maxdeg) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  }

  static CohClass scalar(int g, int maxdeg, const TPoly& c) {
    CohClass x(g, maxdeg);
    x.add_term(CohMono{}, c);
    return x;
  }
  static CohClass generator(int g, int maxdeg, Gen gen, const TPoly& c = TPoly(1)) {
    CohClass x(g, maxdeg);
    x.add_term(CohMono::of(gen), c);
    return x;
  }

  int genus() const { return g_; }
  int maxdeg() const { return maxdeg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool admissible(const CohMono& m) const {
    return m.degree() <= maxdeg_ && m.j <= g_ && m.k <= g_ && m.l <= 2 * g_;
  }

  /// Adds c*m, silently dropping monomials that vanish in the truncated ring.
  void add_term(const CohMono& m, const TPoly& c) {
    if (c.is_zero() || !admissible(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TPoly coeff(const CohMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? TPoly() : it->second;
  }
  /// Generator-free part.
  TPoly constant_part() const { return coeff(CohMono{}); }
  CohClass nilpotent_part() const {
    CohClass r = *this;
    r.terms_.erase(CohMono{});
    return r;
  }

  CohClass& operator+=(const CohClass& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  CohClass& operator-=(const CohClass& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator-(CohClass a) {
    for (auto& kv : a.terms_) kv.second = -kv.second;
    return a;
  }
  friend CohClass operator*(const TPoly& s, const CohClass& a) {
    CohClass r(a.g_, a.maxdeg_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }

  friend CohClass operator*(const CohClass& a, const CohClass& b) {
    a.check_context(b);
    CohClass r(a.g_, a.maxdeg_);
    for (const auto& [ma, ca] : a.terms_) {
      const int room = a.maxdeg_ - ma.degree();
      for (const auto& [mb, cb] : b.terms_) {
        if (mb.degree() > room) continue;
        r.add_term(ma * mb, ca * cb);
      }
    }
    return r;
  }
  CohClass& operator*=(const CohClass& o) { return *this = *this * o; }

  /// x^r. Negative r requires the generator-free part to be a nonzero
  /// t-monomial; then x^r = u^r * sum_m C(r, m) (nu/u)^m with nu nilpotent.
  CohClass pow(long r) const {
    const TPoly u = constant_part();
    if (u.is_monomial()) {
      const TPoly u_inv = *u.inverse();
      const CohClass w = u_inv * nilpotent_part();
      CohClass sum = scalar(g_, maxdeg_, TPoly(1));
      CohClass wpow = sum;
      for (int m = 1; m <= maxdeg_; ++m) {
        wpow *= w;
        if (wpow.is_zero()) break;
        const Rat b = binomial(r, m);
        if (b != 0) sum += TPoly(b) * wpow;
      }
      return u.pow(r) * sum;
    }
    if (r < 0) throw std::domain_error("not invertible in localized ring");
    CohClass result = scalar(g_, maxdeg_, TPoly(1)), base = *this;
    while (r > 0) {
      if (r & 1) result *= base;
      r >>= 1;
      if (r > 0) base *= base;
    }
    return result;
  }

  CohClass inverse() const { return pow(-1); }

  /// Set of values (t-exponent + complex degree) over all stored terms.
  std::set<int> weights() const {
    std::set<int> w;
    for (const auto& [m, c] : terms_)
      for (const auto& [e, v] : c.terms()) w.insert(e + m.degree());
    return w;
  }

  friend bool operator==(const CohClass& a, const CohClass& b) {
    return a.g_ == b.g_ && a.maxdeg_ == b.maxdeg_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + m.to_string();
    }
    return s;
  }

 private:
  void check_context(const CohClass& o) const {
    if (g_ != o.g_ || maxdeg_ != o.maxdeg_) throw std::invalid_argument("mismatched cohomology ring context");
  }

  int g_;
  int maxdeg_;
  Terms terms_;
};

/// Exponential of a nilpotent class; a finite sum under truncation.
inline CohClass exp(const CohClass& x) {
  if (!x.constant_part().is_zero()) throw std::domain_error("exponential of non-nilpotent");
  CohClass sum = CohClass::scalar(x.genus(), x.maxdeg(), TPoly(1));
  CohClass term = sum;
  for (int m = 1; m <= x.maxdeg(); ++m) {
    term = TPoly(Rat(1, m)) * (term * x);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace quotpt
