#include <gtest/gtest.h>

#include <random>

#include "quotpt/cohring.hpp"

using namespace quotpt;

namespace {

CohClass gen(int g, int maxdeg, Gen x, const TPoly& c = TPoly(1)) { return CohClass::generator(g, maxdeg, x, c); }
CohClass scal(int g, int maxdeg, const TPoly& c) { return CohClass::scalar(g, maxdeg, c); }

class Sampler {
 public:
  Sampler(int g, int maxdeg, unsigned seed) : g_(g), maxdeg_(maxdeg), rng_(seed) {}

  CohClass nilpotent(int terms = 4) {
    std::uniform_int_distribution<int> gi(0, 4), coef(-3, 3), tex(-2, 2), pw(1, 2);
    CohClass x(g_, maxdeg_);
    for (int i = 0; i < terms; ++i) {
      CohClass m = gen(g_, maxdeg_, static_cast<Gen>(gi(rng_)), TPoly::monomial(coef(rng_), tex(rng_)));
      x += m.pow(pw(rng_));
    }
    return x;
  }
  CohClass unit_based() {
    std::uniform_int_distribution<int> coef(1, 4), tex(-2, 2);
    return scal(g_, maxdeg_, TPoly::monomial(coef(rng_), tex(rng_))) + nilpotent();
  }

 private:
  int g_, maxdeg_;
  std::mt19937 rng_;
};

}  // namespace

TEST(CohMul, Examples) {
  const int g = 1, md = 4;
  CohClass a1 = gen(g, md, Gen::A1), a2 = gen(g, md, Gen::A2);
  CohClass sq = (a1 + a2) * (a1 + a2);
  EXPECT_EQ(sq, a1 * a1 + gen(g, md, Gen::A1, TPoly(2)) * a2 + a2 * a2);
  CohClass th = gen(g, md, Gen::Theta1);
  EXPECT_TRUE((th * th).is_zero());
  EXPECT_EQ(scal(g, md, TPoly::t()) * th, gen(g, md, Gen::Theta1, TPoly::t()));
}

TEST(CohMul, PrunesByDegreeAndNilpotency) {
  CohClass a = gen(2, 2, Gen::A1);
  EXPECT_TRUE(a.pow(3).is_zero());
  CohClass b = gen(1, 5, Gen::B);
  EXPECT_FALSE(b.pow(2).is_zero());
  EXPECT_TRUE(b.pow(3).is_zero());
  EXPECT_THROW(gen(1, 2, Gen::A1) * gen(2, 2, Gen::A1), std::invalid_argument);
  EXPECT_THROW(gen(1, 2, Gen::A1) + gen(1, 3, Gen::A1), std::invalid_argument);
}

TEST(CohPow, NegativePowers) {
  const int g = 0, md = 2;
  CohClass x = gen(g, md, Gen::A1) - scal(g, md, TPoly::t());
  CohClass inv = x.pow(-1);
  CohClass expected = scal(g, md, TPoly::monomial(-1, -1)) - gen(g, md, Gen::A1, TPoly::t(-2)) -
                      gen(g, md, Gen::A1).pow(2) * scal(g, md, TPoly::t(-3));
  EXPECT_EQ(inv, expected);
  EXPECT_EQ(scal(g, md, TPoly::monomial(2, 1)).pow(-2), scal(g, md, TPoly::monomial(make_rat(1, 4), -2)));
  CohClass p4 = (scal(g, 4, TPoly::t()) + gen(g, 4, Gen::A1)).pow(4);
  EXPECT_EQ(p4.coeff(CohMono::of(Gen::A1)), TPoly::monomial(4, 3));
}

TEST(CohPow, NonUnitRejected) {
  CohClass x = scal(0, 2, TPoly(1) + TPoly::t()) + gen(0, 2, Gen::A1);
  EXPECT_THROW(x.pow(-1), std::domain_error);
  EXPECT_THROW(gen(0, 2, Gen::A1).pow(-1), std::domain_error);
  EXPECT_NO_THROW(x.pow(3));
}

TEST(CohExp, Examples) {
  EXPECT_EQ(exp(CohClass(1, 3)), scal(1, 3, TPoly(1)));
  CohClass e = exp(gen(1, 2, Gen::Theta1, TPoly::monomial(-1, -1)));
  EXPECT_EQ(e, scal(1, 2, TPoly(1)) - gen(1, 2, Gen::Theta1, TPoly::t(-1)));
  CohClass th1 = gen(1, 2, Gen::Theta1), th2 = gen(1, 2, Gen::Theta2);
  EXPECT_EQ(exp(th1 + th2), scal(1, 2, TPoly(1)) + th1 + th2 + th1 * th2);
  EXPECT_THROW(exp(scal(1, 2, TPoly(1))), std::domain_error);
}

TEST(CohRing, AxiomsOnRandomSamples) {
  Sampler s(2, 5, 7);
  for (int trial = 0; trial < 20; ++trial) {
    CohClass x = s.unit_based(), y = s.nilpotent(), z = s.unit_based();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
  }
}

TEST(CohRing, InverseOfUnits) {
  Sampler s(2, 5, 11);
  for (int trial = 0; trial < 20; ++trial) {
    CohClass x = s.unit_based();
    EXPECT_EQ(x.pow(-1) * x, scal(2, 5, TPoly(1)));
    EXPECT_EQ(x.pow(-3) * x.pow(3), scal(2, 5, TPoly(1)));
  }
}

TEST(CohRing, ExpIsAdditive) {
  Sampler s(2, 5, 13);
  for (int trial = 0; trial < 20; ++trial) {
    CohClass x = s.nilpotent(), y = s.nilpotent();
    EXPECT_EQ(exp(x + y), exp(x) * exp(y));
  }
}

TEST(CohRing, HomogeneityIsPreservedByProducts) {
  const int g = 2, md = 6;
  // Each factor is homogeneous when t and every generator carry weight 1.
  CohClass c1 = scal(g, md, TPoly::monomial(3, 1)) - gen(g, md, Gen::A1) - gen(g, md, Gen::A2);
  CohClass c2 = scal(g, md, TPoly::monomial(2, 1)) - gen(g, md, Gen::A1);
  CohClass f1 = c1.pow(-3) * exp(gen(g, md, Gen::B) * c1.inverse());
  CohClass f2 = c2.pow(2) * exp(-(gen(g, md, Gen::Theta1, TPoly(2)) * c2.inverse()));
  ASSERT_EQ(f1.weights().size(), 1U);
  ASSERT_EQ(f2.weights().size(), 1U);
  const auto w = (f1 * f2).weights();
  ASSERT_EQ(w.size(), 1U);
  EXPECT_EQ(*w.begin(), *f1.weights().begin() + *f2.weights().begin());
}
