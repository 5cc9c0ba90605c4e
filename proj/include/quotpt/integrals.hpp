#pragma once

#include <stdexcept>

#include "quotpt/cohring.hpp"
#include "quotpt/rat.hpp"
#include "quotpt/tpoly.hpp"

namespace quotpt {

/// Discrete data of Quot^e E x Sym^n C for E of rank N and degree d on a
/// genus g curve.
struct QuotContext {
  int g = 0;
  int N = 2;
  int d = 0;
  int e = 0;
  int n = 0;

  /// Expected dimension of Quot^e E.
  int vdim1() const { return (1 - g) * (N - 1) + d - N * e; }
  /// Expected dimension of the product with Sym^n C.
  int vdim() const { return vdim1() + n; }
};

namespace detail {

inline Rat int_pow(long base, long exp) { return rat_pow(Rat(base), exp); }

}  // namespace detail

/// Virtual integral of a1^p1 a2^p2 theta1^j theta2^k B^l. Vanishes unless
/// l = 2l' is even and the exponents fill both factors exactly; otherwise
/// (-1)^l' (2l')! g! (g-l')! N^(g-j-l') / (l'! (g-j-l')! (g-k-l')!).
/// The (2l')! comes from B^(2l') = (-1)^l' (2l')! sum_S prod_{i in S} b..b
/// modulo odd monomials, since each B_i squares to -2 b b b b.
inline Rat integrate_monomial(const CohMono& m, const QuotContext& ctx) {
  if (m.l % 2 != 0) return Rat(0);
  const int lp = m.l / 2;
  const int g = ctx.g;
  if (m.p1 + m.j + lp != ctx.vdim1() || m.p2 + m.k + lp != ctx.n) return Rat(0);
  if (m.j + lp > g || m.k + lp > g) return Rat(0);
  Rat v = Rat(factorial(2 * lp) * factorial(g) * factorial(g - lp)) * detail::int_pow(ctx.N, g - m.j - lp) /
          Rat(factorial(lp) * factorial(g - m.j - lp) * factorial(g - m.k - lp));
  return lp % 2 == 0 ? v : Rat(-v);
}

/// Integral of a class against [Quot^e E]^vir x [Sym^n C].
inline TPoly integrate_Y(const CohClass& x, const QuotContext& ctx) {
  if (ctx.vdim1() < 0) throw std::domain_error("component has negative expected dimension");
  if (x.genus() != ctx.g) throw std::invalid_argument("class genus does not match context");
  TPoly total;
  for (const auto& [m, c] : x.terms()) {
    if (m.degree() != ctx.vdim()) continue;
    Rat v = integrate_monomial(m, ctx);
    if (v != 0) total += c * v;
  }
  return total;
}

/// Integral of a^aExp times an even b-monomial with evenPairs pairs over
/// [Quot^e E]^vir: N^(g - evenPairs) when the degree matches, else 0.
inline TPoly quot_intersection(const QuotContext& ctx, int a_exp, int even_pairs) {
  if (even_pairs < 0 || even_pairs > ctx.g) throw std::invalid_argument("evenPairs must lie in [0, g]");
  if (a_exp < 0 || a_exp != ctx.vdim1() - even_pairs) return TPoly();
  return TPoly(detail::int_pow(ctx.N, ctx.g - even_pairs));
}

/// Integral of a^(m-1+k) theta^(g-k) over [Quot^e E]^vir, i.e. N^k g!/k!.
/// The context only supplies g and N; the a-exponent is implied by k.
inline TPoly quot_theta_integral(const QuotContext& ctx, int k) {
  if (k < 0 || k > ctx.g) throw std::invalid_argument("k must lie in [0, g]");
  return TPoly(detail::int_pow(ctx.N, k) * Rat(factorial(ctx.g)) / Rat(factorial(k)));
}

}  // namespace quotpt
