#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quotpt/cohring.hpp"
#include "quotpt/integrals.hpp"
#include "quotpt/rat.hpp"

namespace quotpt::oracle {

/// Odd generators b_{f,i}, f in {1,2}, i in 1..2g, are stored as bits of a
/// mask in factor-major order: bit (f-1)*2g + (i-1).
struct ExtKey {
  std::uint32_t mask = 0;
  int a1 = 0;
  int a2 = 0;
  friend auto operator<=>(const ExtKey&, const ExtKey&) = default;
  friend bool operator==(const ExtKey&, const ExtKey&) = default;
};

inline constexpr int kMaxGenus = 4;

/// Element of the exterior algebra on 4g odd generators tensored with
/// Q[a1, a2].
class ExtClass {
 public:
  using Terms = std::map<ExtKey, Rat>;

  explicit ExtClass(int g) : g_(g) {
    if (g < 0 || g > kMaxGenus) throw std::invalid_argument("oracle genus must lie in [0, 4]");
  }

  static ExtClass one(int g) {
    ExtClass x(g);
    x.terms_.emplace(ExtKey{}, Rat(1));
    return x;
  }
  static ExtClass a_monomial(int g, int a1, int a2, const Rat& c = Rat(1)) {
    ExtClass x(g);
    if (c != 0) x.terms_.emplace(ExtKey{0, a1, a2}, c);
    return x;
  }
  /// b_{factor, index} with factor in {1, 2}, index in 1..2g.
  static ExtClass b(int g, int factor, int index) {
    ExtClass x(g);
    x.terms_.emplace(ExtKey{std::uint32_t{1} << bit(g, factor, index), 0, 0}, Rat(1));
    return x;
  }

  static int bit(int g, int factor, int index) {
    if (factor < 1 || factor > 2 || index < 1 || index > 2 * g) throw std::out_of_range("no such odd generator");
    return (factor - 1) * 2 * g + (index - 1);
  }

  int genus() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExtKey& k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend ExtClass operator+(ExtClass x, const ExtClass& y) {
    for (const auto& [k, c] : y.terms_) x.add_term(k, c);
    return x;
  }
  friend ExtClass operator-(ExtClass x, const ExtClass& y) {
    for (const auto& [k, c] : y.terms_) x.add_term(k, -c);
    return x;
  }
  friend ExtClass operator*(const Rat& s, const ExtClass& x) {
    ExtClass r(x.g_);
    for (const auto& [k, c] : x.terms_) r.add_term(k, s * c);
    return r;
  }

  friend bool operator==(const ExtClass& x, const ExtClass& y) { return x.g_ == y.g_ && x.terms_ == y.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.get_str();
      for (int f = 1; f <= 2; ++f)
        for (int i = 1; i <= 2 * g_; ++i)
          if (k.mask >> bit(g_, f, i) & 1U) s += "*b" + std::to_string(f) + "_" + std::to_string(i);
      if (k.a1) s += "*a1^" + std::to_string(k.a1);
      if (k.a2) s += "*a2^" + std::to_string(k.a2);
    }
    return s;
  }

 private:
  int g_;
  Terms terms_;
};

/// Sign of the permutation sorting the concatenation of two sorted
/// generator sets; zero when they share a generator.
inline int concat_sign(std::uint32_t left, std::uint32_t right) {
  if (left & right) return 0;
  int inversions = 0;
  for (std::uint32_t r = right; r != 0; r &= r - 1) {
    const int pos = std::countr_zero(r);
    inversions += std::popcount(left >> pos);  // left generators above pos
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline ExtClass wedge(const ExtClass& x, const ExtClass& y) {
  if (x.genus() != y.genus()) throw std::invalid_argument("mismatched genus");
  ExtClass r(x.genus());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const int s = concat_sign(kx.mask, ky.mask);
      if (s == 0) continue;
      r.add_term(ExtKey{kx.mask | ky.mask, kx.a1 + ky.a1, kx.a2 + ky.a2}, s > 0 ? Rat(cx * cy) : Rat(-(cx * cy)));
    }
  }
  return r;
}

inline ExtClass wedge_pow(const ExtClass& x, int r) {
  ExtClass acc = ExtClass::one(x.genus());
  for (int i = 0; i < r; ++i) acc = wedge(acc, x);
  return acc;
}

/// theta_f = sum_i b_{f,i} b_{f,g+i}.
inline ExtClass build_theta(int factor, int g) {
  ExtClass s(g);
  for (int i = 1; i <= g; ++i) s = s + wedge(ExtClass::b(g, factor, i), ExtClass::b(g, factor, g + i));
  return s;
}

/// B = sum_i b_{1,i} b_{2,g+i} - b_{1,g+i} b_{2,i}.
inline ExtClass build_B(int g) {
  ExtClass s(g);
  for (int i = 1; i <= g; ++i) {
    s = s + wedge(ExtClass::b(g, 1, i), ExtClass::b(g, 2, g + i));
    s = s - wedge(ExtClass::b(g, 1, g + i), ExtClass::b(g, 2, i));
  }
  return s;
}

namespace detail {

/// Parity of inversions in a sequence of distinct integers.
inline int sequence_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// For a block of one factor's generators (bits 0..2g-1 of `block`, sorted
/// order), returns (sign, pairs) such that the block equals
/// sign * b_{i1} b_{g+i1} ... b_{is} b_{g+is}; pairs = -1 for odd blocks.
inline std::pair<int, int> even_block(std::uint32_t block, int g) {
  std::vector<int> paired;
  for (int i = 0; i < g; ++i) {
    const bool lo = block >> i & 1U;
    const bool hi = block >> (g + i) & 1U;
    if (lo != hi) return {0, -1};
    if (lo) {
      paired.push_back(i);
      paired.push_back(g + i);
    }
  }
  // The block is stored in increasing order, so the reordering sign is the
  // inversion parity of the paired sequence.
  return {sequence_sign(paired), static_cast<int>(paired.size() / 2)};
}

}  // namespace detail

/// Koszul sign of separating factor-1 generators from factor-2 generators in
/// a product written in mask order. Mask order is factor-major, so this
/// counts factor-2 generators preceding factor-1 generators.
inline int split_sign(std::uint32_t mask, int g) {
  int inversions = 0, seen_factor2 = 0;
  for (int pos = 0; pos < 4 * g; ++pos) {
    if (!(mask >> pos & 1U)) continue;
    if (pos >= 2 * g) {
      ++seen_factor2;
    } else {
      inversions += seen_factor2;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Pairing against [Quot^e E]^vir x [Sym^n C] using only the base rules:
/// an even factor-1 block of s pairs with a1^(vdim1 - s) gives N^(g - s),
/// an even factor-2 block of s pairs with a2^(n - s) gives 1.
inline Rat oracle_integrate(const ExtClass& x, const QuotContext& ctx) {
  const int g = x.genus();
  if (g != ctx.g) throw std::invalid_argument("class genus does not match context");
  const std::uint32_t low = (std::uint32_t{1} << (2 * g)) - 1;
  Rat total;
  for (const auto& [k, c] : x.terms()) {
    const auto [s1, pairs1] = detail::even_block(k.mask & low, g);
    const auto [s2, pairs2] = detail::even_block(k.mask >> (2 * g), g);
    if (pairs1 < 0 || pairs2 < 0) continue;
    if (k.a1 != ctx.vdim1() - pairs1 || k.a2 != ctx.n - pairs2) continue;
    const int sign = split_sign(k.mask, g) * s1 * s2;
    const Rat v = c * rat_pow(Rat(ctx.N), g - pairs1);
    total += sign > 0 ? v : Rat(-v);
  }
  return total;
}

struct ValidationRow {
  int g, j, k, b;  // theta1^j theta2^k B^b
  Rat oracle;
  Rat closed_form;
  bool match() const { return oracle == closed_form; }
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.match()) return false;
    return true;
  }
};

/// Compares the exterior-algebra pairing of theta1^j theta2^k B^b against
/// the closed-form monomial rule for every g <= gmax, j, k in [0, g] and
/// b in [0, 2g]. Odd b and over-full products must vanish on both sides.
inline ValidationReport validate_mainformula(int gmax, int N = 2) {
  if (gmax < 0 || gmax > kMaxGenus) throw std::invalid_argument("gmax must lie in [0, 4]");
  ValidationReport report;
  for (int g = 0; g <= gmax; ++g) {
    const int vdim1 = 2 * g + 1, n = 2 * g + 1;
    QuotContext ctx{g, N, vdim1 - (1 - g) * (N - 1), 0, n};
    const ExtClass th1 = build_theta(1, g), th2 = build_theta(2, g), bb = build_B(g);
    std::vector<ExtClass> th1p, th2p, bp;
    for (int i = 0; i <= g; ++i) {
      th1p.push_back(wedge_pow(th1, i));
      th2p.push_back(wedge_pow(th2, i));
    }
    bp.push_back(ExtClass::one(g));
    for (int i = 1; i <= 2 * g; ++i) bp.push_back(wedge(bp.back(), bb));
    for (int j = 0; j <= g; ++j) {
      for (int k = 0; k <= g; ++k) {
        const ExtClass thetas = wedge(th1p[j], th2p[k]);
        for (int b = 0; b <= 2 * g; ++b) {
          const int p1 = vdim1 - j - (b + 1) / 2;
          const int p2 = n - k - b / 2;
          const ExtClass integrand = wedge(ExtClass::a_monomial(g, p1, p2), wedge(thetas, bp[b]));
          const Rat lhs = oracle_integrate(integrand, ctx);
          const Rat rhs = integrate_monomial(CohMono{p1, p2, j, k, b}, ctx);
          report.rows.push_back({g, j, k, b, lhs, rhs});
        }
      }
    }
  }
  return report;
}

}  // namespace quotpt::oracle
