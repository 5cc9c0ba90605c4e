#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "quotpt/localization.hpp"
#include "quotpt/qratfun.hpp"
#include "quotpt/qseries.hpp"
#include "quotpt/rat.hpp"
#include "quotpt/ratpoly.hpp"
#include "quotpt/tpoly.hpp"

namespace quotpt {

namespace detail {

inline TPoly pt_prefactor(const GeomData& gd) { return TPoly::t(4 * gd.g - 4 - 2 * gd.d); }

inline long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

/// s = (2 sin(u/2))^2 = 2 - 2 cos u = q^-1 (1 + q)^2 under -q = e^{iu}.
inline QRatFun s_in_q() { return QRatFun::ratpoly_power(RatPoly{0, 1}, -1) * QRatFun::ratpoly_power(RatPoly{1, 1}, 2); }

}  // namespace detail

/// Degree-2 stable pairs partition function as an exact rational function
/// of q. For d+1-g >= 0 it is the finite sum
///   t^(4g-4-2d) sum_i C(d+1-g, 2i) 2^(2g-1-2i) q^(2-2g-i) (1+q)^(2d+2i);
/// for d+1-g < 0 the binomial sum is resummed into
///   t^(4g-4-2d) 2^(2g-1) s^d (1-s/4)^(d+1-g) sum_j C(g-1-d, 2j) (s/4)^j
/// times q^(d+2-2g), with s = (1+q)^2/q and 1 - s/4 = -(1-q)^2/(4q).
inline QRatFun zpt_closed(const GeomData& gd) {
  const int g = gd.g, d = gd.d;
  const long top = static_cast<long>(d) + 1 - g;
  const TPoly pref = detail::pt_prefactor(gd);
  QRatFun sum;
  if (top >= 0) {
    for (long i = 0; 2 * i <= top; ++i) {
      const Rat c = binomial(top, 2 * i) * rat_pow(Rat(2), 2L * g - 1 - 2 * i);
      sum = sum + QRatFun::q_power(static_cast<int>(2 - 2 * g - i), TPoly(c)) *
                      QRatFun::ratpoly_power(RatPoly{1, 1}, 2L * d + 2 * i);
    }
    return QRatFun(pref) * sum;
  }
  const QRatFun quarter_s = QRatFun(TPoly(Rat(1, 4))) * detail::s_in_q();
  // 1 - s/4 = -(1 - q)^2 / (4q)
  const QRatFun one_minus =
      QRatFun::q_power(-1, TPoly(Rat(-1, 4))) * QRatFun::ratpoly_power(RatPoly{1, -1}, 2);
  QRatFun inner;
  for (long j = 0; 2 * j <= -top; ++j) inner = inner + QRatFun(TPoly(binomial(-top, 2 * j))) * quarter_s.pow(j);
  QRatFun z = QRatFun(pref * TPoly(rat_pow(Rat(2), 2L * g - 1))) * detail::s_in_q().pow(d) * one_minus.pow(top) * inner;
  return z * QRatFun::q_power(d + 2 - 2 * g);
}

/// GW partition function in the variable s = (2 sin(u/2))^2:
///   Z^GW = prefactor * u^u_power * (1 - s/4)^cos_power * s^s_shift * sum_k s_terms[k] s^k.
/// With d+1-g >= 0 the binomial sum is finite (cos_power = s_shift = 0);
/// otherwise the resummed form is stored with cos_power = d+1-g, s_shift = d.
struct SForm {
  TPoly prefactor;
  int u_power = 0;
  std::map<int, TPoly> s_terms;
  int cos_power = 0;
  int s_shift = 0;

  /// Value after -q = e^{iu}, with the u-power removed.
  QRatFun to_q() const {
    const QRatFun s = detail::s_in_q();
    QRatFun poly;
    for (const auto& [k, c] : s_terms) poly = poly + QRatFun(c) * s.pow(k);
    const QRatFun one_minus =
        QRatFun::q_power(-1, TPoly(Rat(-1, 4))) * QRatFun::ratpoly_power(RatPoly{1, -1}, 2);
    return QRatFun(prefactor) * one_minus.pow(cos_power) * s.pow(s_shift) * poly;
  }
};

inline SForm zgw_s_form(const GeomData& gd) {
  const int g = gd.g, d = gd.d;
  const long top = static_cast<long>(d) + 1 - g;
  SForm f;
  f.prefactor = detail::pt_prefactor(gd);
  f.u_power = 4 * g - 4 - 2 * d;
  if (top >= 0) {
    for (long i = 0; 2 * i <= top; ++i) {
      const Rat c = binomial(top, 2 * i) * rat_pow(Rat(2), 2L * g - 1 - 2 * i);
      if (c != 0) f.s_terms[static_cast<int>(i + d)] += TPoly(c);
    }
  } else {
    f.cos_power = static_cast<int>(top);
    f.s_shift = d;
    for (long j = 0; 2 * j <= -top; ++j) {
      const Rat c = rat_pow(Rat(2), 2L * g - 1) * binomial(-top, 2 * j) * rat_pow(Rat(1, 4), j);
      if (c != 0) f.s_terms[static_cast<int>(j)] += TPoly(c);
    }
  }
  return f;
}

/// Power series in s of Z^GW (u-prefactor stripped) through s^order, taken
/// termwise from sum_i C(d+1-g, 2i) 2^(2g-1-2i) s^(i+d). Valid for any sign
/// of d+1-g because the sum converges s-adically.
inline std::map<int, Rat> zgw_termwise_s_series(const GeomData& gd, int order) {
  const long top = static_cast<long>(gd.d) + 1 - gd.g;
  std::map<int, Rat> out;
  for (long i = 0; i + gd.d <= order; ++i) {
    const Rat c = binomial(top, 2 * i) * rat_pow(Rat(2), 2L * gd.g - 1 - 2 * i);
    if (c != 0) out[static_cast<int>(i + gd.d)] = c;
  }
  return out;
}

/// The same series computed from an SForm by expanding (1 - s/4)^cos_power.
inline std::map<int, Rat> sform_s_series(const SForm& f, int order) {
  if (!f.prefactor.is_monomial()) throw std::domain_error("prefactor must be a t-monomial");
  std::map<int, Rat> poly;
  for (const auto& [k, c] : f.s_terms) poly[k + f.s_shift] = c.coeff(0);
  std::map<int, Rat> out;
  for (const auto& [k, c] : poly) {
    for (long m = 0; k + m <= order; ++m) {
      const Rat b = binomial(f.cos_power, m) * rat_pow(Rat(-1, 4), m);
      if (b == 0) continue;
      Rat& slot = out[static_cast<int>(k + m)];
      slot += c * b;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Resummed form 2^(2g-1) s^d (1-s/4)^D sum_j C(-D, 2j) (s/4)^j with
/// D = d+1-g, as a power series in s through s^order. For D >= 0 the j-sum
/// is infinite, so this is the only exact comparison available there.
inline std::map<int, Rat> resummed_s_series(const GeomData& gd, int order) {
  const long D = static_cast<long>(gd.d) + 1 - gd.g;
  std::map<int, Rat> inner;
  for (long j = 0; j + gd.d <= order; ++j) {
    const Rat c = rat_pow(Rat(2), 2L * gd.g - 1) * binomial(-D, 2 * j) * rat_pow(Rat(1, 4), j);
    if (c != 0) inner[static_cast<int>(j + gd.d)] = c;
  }
  std::map<int, Rat> out;
  for (const auto& [k, c] : inner) {
    for (long m = 0; k + m <= order; ++m) {
      const Rat b = binomial(D, m) * rat_pow(Rat(-1, 4), m);
      if (b != 0) out[static_cast<int>(k + m)] += c * b;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Checks u^(4-4g+2d) Z^GW = q^(2g-2-d) Z^PT as exact rational functions.
inline bool gwpt_check(const GeomData& gd) {
  const QRatFun lhs = zgw_s_form(gd).to_q() * QRatFun::q_power(gd.d + 2 - 2 * gd.g);
  return lhs == zpt_closed(gd);
}

/// MacMahon function prod_n (1 - q^n)^(-n) through q^order.
inline QSeries macmahon(int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  QSeries m = QSeries::one(order);
  for (int n = 1; n <= order; ++n) {
    // (1 - q^n)^(-n) = sum_k C(n+k-1, k) q^(nk)
    std::map<int, TPoly> f;
    for (int k = 0; n * k <= order; ++k) f.emplace(n * k, TPoly(binomial(n + k - 1, k)));
    m = m * QSeries::from_terms(f, order);
  }
  return m;
}

/// Series substitution q -> -q.
inline QSeries negate_q(const QSeries& s) {
  QSeries r = s;
  for (int k = s.min_exp(); k <= s.order(); ++k)
    if (k % 2 != 0) r.set(k, -s.coeff(k));
  return r;
}

/// Degree-zero DT partition function M(-q)^(8g-8-d).
inline QSeries zdt0(const GeomData& gd, int order) {
  return negate_q(macmahon(order)).pow(8L * gd.g - 8 - gd.d);
}

struct MinimalInvariant {
  int epsilon;
  int e;
  int chi_min;
  TPoly value;
};

/// Maximal subbundle degree e with g - 1 + epsilon = d - 2e, and the DT=PT
/// invariant in minimal Euler characteristic 2 - 2g - e.
inline MinimalInvariant minimal_invariant(const GeomData& gd) {
  const long top = static_cast<long>(gd.d) + 1 - gd.g;  // = 2e + epsilon
  const int e = static_cast<int>(detail::floor_div2(top));
  const int eps = static_cast<int>(top - 2L * e);
  const TPoly pref = detail::pt_prefactor(gd);
  TPoly value = eps == 0 ? pref * rat_pow(Rat(2), 3L * gd.g - 2 - gd.d)
                         : pref * (Rat(top) * rat_pow(Rat(2), 3L * gd.g - 1 - gd.d));
  return {eps, e, 2 - 2 * gd.g - e, std::move(value)};
}

/// Number of maximal subbundles of a generic rank-2 bundle, 2^g.
inline BigInt segre_count(int g) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  return BigInt(1) << static_cast<mp_bitcnt_t>(g);
}

struct SeriesComparison {
  QSeries localization;
  QSeries closed_form;
  int through;
  bool match() const { return localization.equal_through(closed_form, through); }
  bool lowest_match() const {
    auto v1 = localization.valuation(), v2 = closed_form.valuation();
    if (v1 != v2) return false;
    return !v1 || localization.coeff(*v1) == closed_form.coeff(*v1);
  }
};

/// Localization series against the expansion of zpt_closed through chi_max.
inline SeriesComparison compare_with_closed_form(const GeomData& gd, int chi_max, bool parallel = false) {
  return {pt_series(gd, chi_max, parallel), zpt_closed(gd).expand(chi_max), chi_max};
}

}  // namespace quotpt
