#include <gtest/gtest.h>

#include <map>
#include <tuple>

#include "quotpt/localization.hpp"

using namespace quotpt;

namespace {

const std::map<std::pair<int, int>, long> kTable = {
    {{-1, 0}, -2}, {{-2, 0}, 4},    {{-3, 0}, 18},   {{-1, 1}, -28}, {{-4, 0}, 424},
    {{-2, 1}, -408}, {{-5, 0}, 7750}, {{-3, 1}, -8404}, {{-1, 2}, 626},
};

bool is_multiple_of(const TPoly& p, int exp) { return p.is_zero() || (p.is_monomial() && p.min_exp() == exp); }

}  // namespace

TEST(FixedComponents, Examples) {
  GeomData p1{0, -2};
  EXPECT_EQ(fixed_components(p1, 1), (std::vector<FixedComponent>{{-1, 0}}));
  EXPECT_EQ(fixed_components(p1, 3), (std::vector<FixedComponent>{{-3, 0}, {-1, 1}}));
  EXPECT_EQ(fixed_components(GeomData{1, 1}, 0), (std::vector<FixedComponent>{{0, 0}}));
  EXPECT_TRUE(fixed_components(p1, 0).empty());
}

TEST(NvirTerms, WeightAudit) {
  const auto terms = nvir_terms(GeomData{1, 2}, FixedComponent{0, 1});
  ASSERT_EQ(terms.size(), 10U);
  const int expected[] = {-1, 2, 3, 1, 2, -1, 2, 3, 1, 1};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    EXPECT_EQ(terms[i].total_weight(), expected[i]) << terms[i].label;
    EXPECT_NE(terms[i].total_weight(), 0);
    EXPECT_EQ(terms[i].sign, i < 5 ? 1 : -1);
  }
}

TEST(EulerPushforward, ZeroWeightRejected) {
  PushTerm fixed{"Hom(S,Q)", LineClass::trivial(), false, 1, 1};
  EXPECT_THROW(euler_pushforward(fixed, GeomData{1, 0}, 2), std::domain_error);
}

TEST(EulerPushforward, Examples) {
  const GeomData gd{1, 3};
  const FixedComponent comp{0, 1};
  const int md = comp.vdim(gd);
  const auto terms = nvir_terms(gd, comp);
  // S^v D
  CohClass c = CohClass::generator(1, md, Gen::A1) + CohClass::generator(1, md, Gen::A2) -
               CohClass::scalar(1, md, TPoly::t());
  CohClass th = CohClass::generator(1, md, Gen::Theta1) + CohClass::generator(1, md, Gen::Theta2) +
                CohClass::generator(1, md, Gen::B);
  EXPECT_EQ(euler_pushforward(terms[0], gd, md), c.pow(1 - gd.g + comp.n - comp.e) * exp(-(th * c.inverse())));
  // E alone
  EXPECT_EQ(euler_pushforward(PushTerm{"E", LineClass::trivial(), true, 1, 1}, gd, md),
            CohClass::scalar(1, md, TPoly::t(2 - 2 * gd.g + gd.d)));
  // S L2E
  CohClass c3 = CohClass::scalar(1, md, TPoly::monomial(3, 1)) - CohClass::generator(1, md, Gen::A1);
  EXPECT_EQ(euler_pushforward(terms[7], gd, md),
            c3.pow(1 - gd.g + comp.e + gd.d) * exp(-(CohClass::generator(1, md, Gen::Theta1) * c3.inverse())));
}

TEST(Etnvir, LeadingTermsAtNZero) {
  for (int g = 0; g <= 3; ++g)
    for (int d = -3; d <= 5; ++d)
      for (int e = -3; e <= 3; ++e) {
        const GeomData gd{g, d};
        const FixedComponent comp{e, 0};
        if (comp.vdim1(gd) < 1) continue;
        const CohClass x = etnvir(gd, comp);
        const Rat p = rat_pow(Rat(2), g - 2 * e - 1);
        EXPECT_EQ(x.constant_part(), TPoly::monomial(p, 3 * g - 3 - d - 2 * e));
        if (g > 0) {
          EXPECT_EQ(x.coeff(CohMono::of(Gen::Theta1)), TPoly::monomial(-p, 3 * g - 4 - d - 2 * e));
        }
        EXPECT_EQ(x.coeff(CohMono::of(Gen::A1)),
                  TPoly::monomial(rat_pow(Rat(2), g - 2 * e - 2) * (2 - 2 * g + 3 * d - 2 * e), 3 * g - 4 - d - 2 * e));
      }
}

TEST(Etnvir, Homogeneous) {
  for (int g = 0; g <= 2; ++g)
    for (int d = -2; d <= 3; ++d)
      for (int m = 0; m <= 3; ++m)
        for (const auto& comp : fixed_components(GeomData{g, d}, m)) {
          const auto w = etnvir(GeomData{g, d}, comp).weights();
          ASSERT_EQ(w.size(), 1U);
          EXPECT_EQ(*w.begin(), -3 + 3 * g - d - 2 * comp.e + comp.n);
        }
}

TEST(ComponentContribution, GenusZeroTable) {
  for (const auto& [en, v] : kTable) {
    const auto [e, n] = en;
    EXPECT_EQ(component_contribution(GeomData{0, -2}, FixedComponent{e, n}), TPoly(v)) << e << "," << n;
  }
  EXPECT_THROW(component_contribution(GeomData{0, -2}, FixedComponent{1, 0}), std::domain_error);
}

TEST(Genus0C, IndependentRouteMatchesTable) {
  for (const auto& [en, v] : kTable) EXPECT_EQ(genus0_C(-2, en.first, en.second), TPoly(v));
  EXPECT_THROW(genus0_C(-2, 1, 0), std::domain_error);
}

TEST(Genus0C, AgreesWithLocalizationOffTable) {
  for (int d = -3; d <= 2; ++d)
    for (int e = -4; e <= 1; ++e)
      for (int n = 0; n <= 2; ++n) {
        if (1 + d - 2 * e < 0) continue;
        EXPECT_EQ(genus0_C(d, e, n), component_contribution(GeomData{0, d}, FixedComponent{e, n}))
            << d << "," << e << "," << n;
      }
}

TEST(PtInvariant, Examples) {
  EXPECT_EQ(pt_invariant(GeomData{0, -2}, 4), TPoly(4));
  EXPECT_EQ(pt_invariant(GeomData{0, -2}, 5), TPoly(-10));
  EXPECT_EQ(pt_invariant(GeomData{2, 1}, -2), TPoly::monomial(8, 2));
  EXPECT_TRUE(pt_invariant(GeomData{0, -2}, 2).is_zero());
}

TEST(PtInvariant, TPurity) {
  for (int g = 0; g <= 2; ++g)
    for (int d = -2; d <= 3; ++d) {
      const GeomData gd{g, d};
      for (int chi = min_chi(gd); chi <= min_chi(gd) + 3; ++chi)
        EXPECT_TRUE(is_multiple_of(pt_invariant(gd, chi), 4 * g - 4 - 2 * d)) << g << "," << d << "," << chi;
    }
}

TEST(PtInvariant, ParallelMatchesSequential) {
  const GeomData gd{1, 2};
  for (int chi = min_chi(gd); chi <= min_chi(gd) + 4; ++chi) EXPECT_EQ(pt_invariant(gd, chi, true), pt_invariant(gd, chi));
  EXPECT_EQ(pt_series(gd, 3, true).to_string(), pt_series(gd, 3).to_string());
}

TEST(PtSeries, Examples) {
  EXPECT_EQ(pt_series(GeomData{0, -2}, 7).to_string(), "-2*q^3 + 4*q^4 - 10*q^5 + 16*q^6 - 28*q^7");
  const QSeries s = pt_series(GeomData{1, 1}, 2);
  EXPECT_EQ(s.coeff(0), TPoly::monomial(2, -2));
  EXPECT_EQ(s.coeff(1), TPoly::monomial(4, -2));
  EXPECT_EQ(s.coeff(2), TPoly::monomial(2, -2));
  EXPECT_TRUE(s.coeff(-1).is_zero());
}
