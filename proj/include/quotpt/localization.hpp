#pragma once

#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "quotpt/cohring.hpp"
#include "quotpt/integrals.hpp"
#include "quotpt/qseries.hpp"
#include "quotpt/tpoly.hpp"

namespace quotpt {

/// Genus of the curve and degree of the rank-2 bundle E. Residue invariants
/// depend on nothing else.
struct GeomData {
  int g = 0;
  int d = 0;
};

/// The fixed locus Quot^e E x Sym^n C inside the stable pairs space.
struct FixedComponent {
  int e = 0;
  int n = 0;

  int m() const { return 2 * n - e; }
  int chi(const GeomData& gd) const { return 2 - 2 * gd.g + m(); }
  int vdim1(const GeomData& gd) const { return 1 - gd.g + gd.d - 2 * e; }
  int vdim(const GeomData& gd) const { return vdim1(gd) + n; }
  QuotContext context(const GeomData& gd) const { return {gd.g, 2, gd.d, e, n}; }

  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

/// Equivariant line bundle on Y x C with
/// c1 = x1 a1 + x2 a2 + w t + u1 gamma1 + u2 gamma2 + delta eta,
/// where gamma_f is the (1,1) Kunneth part coming from factor f.
struct LineClass {
  int x1 = 0, x2 = 0, w = 0, u1 = 0, u2 = 0, delta = 0;

  friend LineClass operator*(const LineClass& a, const LineClass& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.w + b.w, a.u1 + b.u1, a.u2 + b.u2, a.delta + b.delta};
  }
  LineClass dual() const { return {-x1, -x2, -w, -u1, -u2, -delta}; }

  static LineClass trivial() { return {}; }
  /// Dual of the universal subsheaf: ch = e^(a1 - t)(1 - gamma1 - e eta - theta1 eta).
  static LineClass s_dual(int e) { return {1, 0, -1, -1, 0, -e}; }
  /// Universal divisor: ch = e^(a2)(1 - gamma2 + n eta - theta2 eta).
  static LineClass divisor(int n) { return {0, 1, 0, 0, -1, n}; }
  /// Determinant of E, weight 2.
  static LineClass det_e(int d) { return {0, 0, 2, 0, 0, d}; }

  friend bool operator==(const LineClass&, const LineClass&) = default;
};

/// One summand p_!(line [tensor E]) of the virtual normal bundle. sign = +1
/// for summands of N^vir, -1 for subtracted ones.
struct PushTerm {
  std::string label;
  LineClass line;
  bool with_e = false;
  int sign = 1;
  int multiplicity = 1;

  int total_weight() const { return line.w + (with_e ? 1 : 0); }
};

/// The ten summands of N^vir for Quot^e E x Sym^n C.
inline std::vector<PushTerm> nvir_terms(const GeomData& gd, const FixedComponent& comp) {
  const LineClass sv = LineClass::s_dual(comp.e);
  const LineClass s = sv.dual();
  const LineClass dv = LineClass::divisor(comp.n);
  const LineClass ddual = dv.dual();
  const LineClass l2 = LineClass::det_e(gd.d);
  return {
      {"S^v D", sv * dv, false, +1, 1},
      {"D^v L2E", ddual * l2, false, +1, 1},
      {"D^v S L2E", ddual * s * l2, false, +1, 1},
      {"2E", LineClass::trivial(), true, +1, 2},
      {"S E", s, true, +1, 1},
      {"S^v", sv, false, -1, 1},
      {"2 L2E", l2, false, -1, 2},
      {"S L2E", s * l2, false, -1, 1},
      {"S", s, false, -1, 1},
      {"S^v L2E", sv * l2, false, -1, 1},
  };
}

namespace detail {

struct EulerData {
  CohClass c;      // equivariant first Chern class of the line (times E)
  int chi;         // rank of the pushforward
  CohClass theta;  // rho * Theta
};

inline EulerData euler_data(const PushTerm& term, const GeomData& gd, int maxdeg) {
  const int g = gd.g;
  const int wtot = term.total_weight();
  if (wtot == 0) throw std::domain_error("fixed-direction bundle has no equivariant Euler class inverse");
  const LineClass& L = term.line;
  CohClass c = CohClass::scalar(g, maxdeg, TPoly::monomial(Rat(wtot), 1));
  c += CohClass::generator(g, maxdeg, Gen::A1, TPoly(L.x1));
  c += CohClass::generator(g, maxdeg, Gen::A2, TPoly(L.x2));
  // (u1 gamma1 + u2 gamma2)^2 = -2 (u1^2 theta1 + u2^2 theta2 + u1 u2 B) eta
  const int rho = term.with_e ? 2 : 1;
  CohClass theta = CohClass::generator(g, maxdeg, Gen::Theta1, TPoly(rho * L.u1 * L.u1));
  theta += CohClass::generator(g, maxdeg, Gen::Theta2, TPoly(rho * L.u2 * L.u2));
  theta += CohClass::generator(g, maxdeg, Gen::B, TPoly(rho * L.u1 * L.u2));
  const int chi = rho * (1 - g + L.delta) + (term.with_e ? gd.d : 0);
  return {std::move(c), chi, std::move(theta)};
}

}  // namespace detail

/// e_T(p_! term) = c^chi exp(-rho Theta / c) for a single copy of the term.
inline CohClass euler_pushforward(const PushTerm& term, const GeomData& gd, int maxdeg) {
  auto data = detail::euler_data(term, gd, maxdeg);
  return data.c.pow(data.chi) * exp(-(data.theta * data.c.inverse()));
}

/// e_T(-N^vir) on the component, truncated at its virtual dimension.
inline CohClass etnvir(const GeomData& gd, const FixedComponent& comp) {
  const int maxdeg = comp.vdim(gd);
  if (maxdeg < 0) throw std::domain_error("component has negative expected dimension");
  CohClass prefactor = CohClass::scalar(gd.g, maxdeg, TPoly(1));
  CohClass exponent(gd.g, maxdeg);
  for (const auto& term : nvir_terms(gd, comp)) {
    // e_T(-N) picks up e(term)^(-sign * multiplicity)
    const int power = -term.sign * term.multiplicity;
    auto data = detail::euler_data(term, gd, maxdeg);
    prefactor *= data.c.pow(static_cast<long>(data.chi) * power);
    exponent -= TPoly(power) * (data.theta * data.c.inverse());
  }
  return prefactor * exp(exponent);
}

/// All (e, n) with 2n - e = m, n >= 0 and nonnegative vdim1, sorted by n.
inline std::vector<FixedComponent> fixed_components(const GeomData& gd, int m) {
  std::vector<FixedComponent> out;
  for (int n = 0;; ++n) {
    FixedComponent c{2 * n - m, n};
    if (c.vdim1(gd) < 0) break;  // vdim1 decreases with n
    out.push_back(c);
  }
  return out;
}

inline TPoly component_contribution(const GeomData& gd, const FixedComponent& comp) {
  const QuotContext ctx = comp.context(gd);
  if (ctx.vdim1() < 0) throw std::domain_error("component has negative expected dimension");
  if (comp.n < 0) throw std::invalid_argument("divisor degree must be nonnegative");
  return integrate_Y(etnvir(gd, comp), ctx);
}

/// Stable pairs residue invariant P_{chi, 2[C]}(d).
inline TPoly pt_invariant(const GeomData& gd, int chi, bool parallel = false) {
  const auto comps = fixed_components(gd, chi - 2 + 2 * gd.g);
  TPoly total;
  if (parallel && comps.size() > 1) {
    std::vector<std::future<TPoly>> jobs;
    jobs.reserve(comps.size());
    for (const auto& c : comps)
      jobs.push_back(std::async(std::launch::async, [gd, c] { return component_contribution(gd, c); }));
    for (auto& j : jobs) total += j.get();
  } else {
    for (const auto& c : comps) total += component_contribution(gd, c);
  }
  return total;
}

/// Lowest Euler characteristic with a nonempty fixed locus.
inline int min_chi(const GeomData& gd) {
  const int top = 1 - gd.g + gd.d;  // vdim1 at e = 0
  const int e_max = top >= 0 ? top / 2 : -((-top + 1) / 2);
  return 2 - 2 * gd.g - e_max;
}

inline QSeries pt_series(const GeomData& gd, int chi_max, bool parallel = false) {
  const int lo = min_chi(gd);
  QSeries s(std::min(lo, chi_max + 1), chi_max);
  if (parallel) {
    std::vector<std::future<TPoly>> jobs;
    for (int chi = lo; chi <= chi_max; ++chi)
      jobs.push_back(std::async(std::launch::async, [gd, chi] { return pt_invariant(gd, chi); }));
    for (int chi = lo; chi <= chi_max; ++chi) s.set(chi, jobs[static_cast<std::size_t>(chi - lo)].get());
  } else {
    for (int chi = lo; chi <= chi_max; ++chi) s.set(chi, pt_invariant(gd, chi));
  }
  return s;
}

namespace genus0 {

/// Dense bivariate series in a1 (degree <= A) and a2 (degree <= M) with
/// TPoly coefficients.
class Biv {
 public:
  Biv(int A, int M) : A_(A), M_(M), c_(static_cast<std::size_t>((A + 1) * (M + 1))) {}

  TPoly& at(int i, int j) { return c_[static_cast<std::size_t>(i * (M_ + 1) + j)]; }
  const TPoly& at(int i, int j) const { return c_[static_cast<std::size_t>(i * (M_ + 1) + j)]; }

  friend Biv operator*(const Biv& x, const Biv& y) {
    Biv r(x.A_, x.M_);
    for (int i1 = 0; i1 <= x.A_; ++i1)
      for (int j1 = 0; j1 <= x.M_; ++j1) {
        const TPoly& cx = x.at(i1, j1);
        if (cx.is_zero()) continue;
        for (int i2 = 0; i1 + i2 <= x.A_; ++i2)
          for (int j2 = 0; j1 + j2 <= x.M_; ++j2) {
            const TPoly& cy = y.at(i2, j2);
            if (!cy.is_zero()) r.at(i1 + i2, j1 + j2) += cx * cy;
          }
      }
    return r;
  }

  /// (w t + x1 a1 + x2 a2)^r, expanded binomially around the t-monomial.
  static Biv linear_power(int A, int M, int w, int x1, int x2, long r) {
    Biv out(A, M);
    for (int m = 0; m <= A + M; ++m) {
      const Rat bm = binomial(r, m);
      if (bm == 0) continue;
      const TPoly head = TPoly::monomial(rat_pow(Rat(w), r - m), static_cast<int>(r - m));
      for (int i = 0; i <= m; ++i) {
        if (i > A || m - i > M) continue;
        const Rat coeff = bm * binomial(m, i) * rat_pow(Rat(x1), i) * rat_pow(Rat(x2), m - i);
        if (coeff != 0) out.at(i, m - i) += head * coeff;
      }
    }
    return out;
  }

 private:
  int A_, M_;
  std::vector<TPoly> c_;
};

}  // namespace genus0

/// Genus-zero component contribution C(d, e, n): coefficient of
/// a1^(1+d-2e) a2^n in
///   (a1-t)^(1-e) (2t)^(2d+2) (3t-a1)^(d+e+1) (t-a1)^(e+1) (a1+t)^(1+d-e)
///   / [ (a1+a2-t)^(1+n-e) (2t-a2)^(1+d-n) (3t-a1-a2)^(1+d+e-n)
///       t^(2d+4) (2t-a1)^(d+2e+2) ].
/// Computed on a dense grid without the cohomology ring machinery.
inline TPoly genus0_C(int d, int e, int n) {
  const int A = 1 + d - 2 * e;
  if (A < 0) throw std::domain_error("component has negative expected dimension");
  if (n < 0) throw std::invalid_argument("divisor degree must be nonnegative");
  using genus0::Biv;
  auto lin = [&](int w, int x1, int x2, long r) { return Biv::linear_power(A, n, w, x1, x2, r); };
  Biv f = lin(-1, 1, 0, 1 - e);
  f = f * lin(2, 0, 0, 2L * d + 2);
  f = f * lin(3, -1, 0, d + e + 1);
  f = f * lin(1, -1, 0, e + 1);
  f = f * lin(1, 1, 0, 1 + d - e);
  f = f * lin(-1, 1, 1, -(1L + n - e));
  f = f * lin(2, 0, -1, -(1L + d - n));
  f = f * lin(3, -1, -1, -(1L + d + e - n));
  f = f * lin(1, 0, 0, -(2L * d + 4));
  f = f * lin(2, -1, 0, -(static_cast<long>(d) + 2L * e + 2));
  return f.at(A, n);
}

}  // namespace quotpt
