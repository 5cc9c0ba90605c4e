#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "quotpt/oracle.hpp"

using namespace quotpt;
using namespace quotpt::oracle;

namespace {

ExtClass random_class(int g, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> mask(0, (1U << (4 * g)) - 1);
  std::uniform_int_distribution<int> coef(-3, 3), ap(0, 2);
  ExtClass x(g);
  for (int i = 0; i < 4; ++i) x.add_term(ExtKey{mask(rng), ap(rng), ap(rng)}, Rat(coef(rng)));
  return x;
}

// Single-parity pieces, for the graded-commutativity check.
ExtClass homogeneous_part(const ExtClass& x, bool odd) {
  ExtClass r(x.genus());
  for (const auto& [k, c] : x.terms())
    if ((std::popcount(k.mask) % 2 == 1) == odd) r.add_term(k, c);
  return r;
}

}  // namespace

TEST(Wedge, Examples) {
  const int g = 1;
  ExtClass b11 = ExtClass::b(g, 1, 1), b12 = ExtClass::b(g, 1, 2);
  ExtClass b21 = ExtClass::b(g, 2, 1), b22 = ExtClass::b(g, 2, 2);
  EXPECT_TRUE(wedge(b11, b11).is_zero());
  EXPECT_EQ(wedge(b12, b11), Rat(-1) * wedge(b11, b12));
  ExtClass left = wedge(b11, b12), right = wedge(b21, b22);
  EXPECT_EQ(wedge(left, right), wedge(wedge(wedge(b11, b12), b21), b22));
  EXPECT_EQ(wedge(right, left), wedge(left, right));
}

TEST(Wedge, ConcatSign) {
  EXPECT_EQ(concat_sign(0b01, 0b10), 1);
  EXPECT_EQ(concat_sign(0b10, 0b01), -1);
  EXPECT_EQ(concat_sign(0b11, 0b01), 0);
  EXPECT_EQ(concat_sign(0b110, 0b001), 1);
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  std::mt19937 rng(2024);
  for (int g = 1; g <= 3; ++g) {
    for (int trial = 0; trial < 25; ++trial) {
      ExtClass x = random_class(g, rng), y = random_class(g, rng), z = random_class(g, rng);
      EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
      for (bool ox : {false, true})
        for (bool oy : {false, true}) {
          ExtClass hx = homogeneous_part(x, ox), hy = homogeneous_part(y, oy);
          const Rat sign = ox && oy ? Rat(-1) : Rat(1);
          EXPECT_EQ(wedge(hx, hy), sign * wedge(hy, hx));
        }
    }
  }
}

TEST(Builders, Theta) {
  EXPECT_EQ(build_theta(1, 1), wedge(ExtClass::b(1, 1, 1), ExtClass::b(1, 1, 2)));
  EXPECT_EQ(build_theta(2, 2), wedge(ExtClass::b(2, 2, 1), ExtClass::b(2, 2, 3)) +
                                   wedge(ExtClass::b(2, 2, 2), ExtClass::b(2, 2, 4)));
  EXPECT_TRUE(wedge_pow(build_theta(1, 2), 3).is_zero());
  EXPECT_THROW(ExtClass::b(2, 3, 1), std::out_of_range);
  EXPECT_THROW(ExtClass(5), std::invalid_argument);
}

TEST(Builders, CrossTermPowers) {
  // B^(2l) has coefficient (-1)^l (2l)! on every block of l full index pairs
  // modulo odd monomials, and B^(2g+1) vanishes.
  for (int g = 1; g <= 3; ++g) {
    ExtClass B = build_B(g);
    EXPECT_TRUE(wedge_pow(B, 2 * g + 1).is_zero());
    for (int l = 1; l <= g; ++l) {
      ExtClass p = wedge_pow(B, 2 * l);
      for (const auto& [k, c] : p.terms()) {
        const std::uint32_t low = (1U << (2 * g)) - 1;
        auto [s1, pairs1] = oracle::detail::even_block(k.mask & low, g);
        auto [s2, pairs2] = oracle::detail::even_block(k.mask >> (2 * g), g);
        if (pairs1 < 0 || pairs2 < 0) continue;
        EXPECT_EQ(pairs1, l);
        EXPECT_EQ(k.mask & low, k.mask >> (2 * g));
        const Rat expected = Rat(factorial(2 * l)) * (l % 2 == 0 ? 1 : -1);
        EXPECT_EQ(c * split_sign(k.mask, g) * s1 * s2, expected);
      }
    }
  }
}

TEST(OracleIntegrate, BaseRules) {
  const int g = 2;
  QuotContext ctx{g, 2, 3, 0, 2};
  ExtClass one_pair = wedge(ExtClass::b(g, 1, 1), ExtClass::b(g, 1, 3));
  EXPECT_EQ(oracle_integrate(wedge(ExtClass::a_monomial(g, ctx.vdim1() - 1, 2), one_pair), ctx), Rat(2));
  ExtClass wrong_order = wedge(ExtClass::b(g, 1, 3), ExtClass::b(g, 1, 1));
  EXPECT_EQ(oracle_integrate(wedge(ExtClass::a_monomial(g, ctx.vdim1() - 1, 2), wrong_order), ctx), Rat(-2));
  ExtClass odd = wedge(ExtClass::b(g, 1, 1), ExtClass::b(g, 1, 2));
  EXPECT_EQ(oracle_integrate(wedge(ExtClass::a_monomial(g, ctx.vdim1() - 1, 2), odd), ctx), Rat(0));
  EXPECT_THROW(oracle_integrate(ExtClass::one(1), ctx), std::invalid_argument);
}

TEST(ValidateMainformula, AllRowsAgreeThroughGenusThree) {
  const auto report = validate_mainformula(3);
  EXPECT_TRUE(report.all_pass());
  for (const auto& r : report.rows) {
    EXPECT_TRUE(r.match()) << "g=" << r.g << " j=" << r.j << " k=" << r.k << " b=" << r.b << " oracle "
                           << r.oracle.get_str() << " closed " << r.closed_form.get_str();
    if (r.b % 2 != 0) {
      EXPECT_EQ(r.oracle, Rat(0));
    }
    if (r.g == 2 && r.j == 0 && r.k == 0 && r.b == 2) {
      EXPECT_EQ(r.oracle, Rat(-8));
    }
  }
  EXPECT_THROW(validate_mainformula(5), std::invalid_argument);
}

TEST(ValidateMainformula, GenusOneFullSweep) {
  const auto report = validate_mainformula(1);
  EXPECT_EQ(report.rows.size(), 1U + 2 * 2 * 3);
  EXPECT_TRUE(report.all_pass());
}
