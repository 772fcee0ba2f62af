#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "scg/bloch.hpp"

using namespace scg;
using namespace scg::bloch;

namespace {

Rational q(int a, int b = 1) { return Rational(a) / Rational(b); }

PrePoint rational_point(const Rational& r) { return {Complex(to_double(r)), r, std::nullopt, std::nullopt}; }

GroupPtr gaussian_group() {
  return GeneratorGroup::make({{"i", Complex(0.0, 1.0), 4}, {"1-i", Complex(1.0, -1.0), 0}});
}

PrePoint word_point(const GroupPtr& g, Complex z, std::map<std::string, std::int64_t> zw,
                    std::map<std::string, std::int64_t> ow) {
  return {z, std::nullopt, MultiplicativeElement::from_word(g, zw, z),
          MultiplicativeElement::from_word(g, ow, 1.0 - z)};
}

}  // namespace

TEST(Wedge, AlternatingAndBilinear) {
  auto g = GeneratorGroup::prime_base({2, 3, 5});
  auto two = MultiplicativeElement::generator(g, "2");
  auto three = MultiplicativeElement::generator(g, "3");
  auto five = MultiplicativeElement::generator(g, "5");
  EXPECT_TRUE(wedge(two, two).is_zero());
  EXPECT_TRUE((wedge(two, three) + wedge(three, two)).is_zero());
  EXPECT_FALSE(wedge(two, three).is_zero());
  WedgeElement lhs = wedge(two * five, three);
  WedgeElement rhs = wedge(two, three) + wedge(five, three);
  EXPECT_TRUE((lhs + rhs * q(-1)).is_zero());
  EXPECT_TRUE((wedge(two.pow(3), three) + wedge(two, three) * q(-3)).is_zero());
}

TEST(Wedge, TorsionContributesNothing) {
  auto g = GeneratorGroup::prime_base({2, 3});
  auto minus_one = MultiplicativeElement::generator(g, "-1");
  auto three = MultiplicativeElement::generator(g, "3");
  EXPECT_TRUE(wedge(minus_one, three).is_zero());
}

TEST(Wedge, MixedGroupsRaise) {
  auto g = GeneratorGroup::prime_base({2});
  auto h = GeneratorGroup::prime_base({2});
  try {
    wedge(MultiplicativeElement::generator(g, "2"), MultiplicativeElement::generator(h, "2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::mixed_group);
  }
}

TEST(Express, RationalOverPrimeBase) {
  auto g = GeneratorGroup::prime_base({2, 3});
  auto e = express_rational(g, q(-9, 8));
  EXPECT_NEAR(std::abs(e.value() - Complex(-9.0 / 8.0)), 0.0, 1e-15);
  EXPECT_EQ(e.word().at("3"), 2);
  EXPECT_EQ(e.word().at("2"), -3);
  try {
    express_rational(g, q(5));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::inexpressible);
  }
}

TEST(Delta2, SmallRationalPoints) {
  auto g = GeneratorGroup::prime_base({2, 3});
  PreBlochElement two;
  two.add(rational_point(2), 1);
  EXPECT_TRUE(delta2(two, g).is_zero());
  PreBlochElement half;
  half.add(rational_point(q(1, 2)), 1);
  EXPECT_TRUE(delta2(half, g).is_zero());
  PreBlochElement three;
  three.add(rational_point(3), 1);
  WedgeElement w = delta2(three, g);
  ASSERT_EQ(w.coefficients().size(), 1u);
  EXPECT_EQ(abs(w.coefficients().begin()->second), Rational(1));
}

TEST(Delta2, InexpressiblePointRaises) {
  auto g = GeneratorGroup::prime_base({2});
  PreBlochElement p;
  p.add(rational_point(7), 1);
  try {
    delta2(p, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::inexpressible);
  }
}

TEST(PrimeSupport, CollectsNumeratorsAndDenominators) {
  PreBlochElement p;
  p.add(rational_point(q(9, 10)), 1);
  p.add(rational_point(q(-6)), 2);
  EXPECT_EQ(prime_support(p), (std::vector<int>{2, 3, 5, 7}));
}

TEST(FiveTerm, RationalRelatorIsInKernel) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 6);
  int checked = 0;
  while (checked < 20) {
    std::array<RationalPoint, 5> x;
    for (auto& p : x) p = {q(num(rng), den(rng)), false};
    bool distinct = true;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) distinct = distinct && x[i].value != x[j].value;
    }
    if (!distinct) continue;
    PreBlochElement r = five_term_relator(x);
    EXPECT_TRUE(delta2(r, GeneratorGroup::prime_base(prime_support(r))).is_zero());
    EXPECT_LT(std::abs(r.bloch_wigner_sum()), 1e-12);
    ++checked;
  }
}

TEST(FiveTerm, ExactCrossRatio) {
  RationalPoint c = cross_ratio({0}, {1}, {2}, {3});
  EXPECT_EQ(c.value, q(4, 3));
  RationalPoint d = cross_ratio({0, true}, {0}, {1}, {q(5, 7)});
  EXPECT_EQ(d.value, q(5, 7));
}

TEST(FiveTerm, ComplexRelatorBlochWignerSum) {
  std::array<ProjectivePoint, 5> x = {Complex(0.1, 0.2), Complex(-1.0, 0.5), Complex(2.0, -0.3), Complex(0.7, 1.9),
                                      Complex(-0.4, -1.2)};
  EXPECT_LT(std::abs(five_term_relator(x).bloch_wigner_sum()), 1e-12);
}

TEST(DeltaN, SymbolToTensor) {
  FormalSymbolSum s;
  s.weight = 3;
  s.terms = {{"x", 2}, {"y", -1}, {"w", 0}};
  FormalTensorSum t = delta_n(s);
  EXPECT_EQ(t.weight, 2);
  EXPECT_EQ(t.terms.size(), 2u);
  EXPECT_EQ(t.terms.at("x"), 2);
  EXPECT_EQ(t.terms.at("y"), -1);
}

TEST(GaussianWords, WhiteheadShapes) {
  auto g = gaussian_group();
  Complex z0(1.0, 1.0);
  Complex z1(0.5, 0.5);
  PreBlochElement p;
  p.add(word_point(g, z0, {{"i", 1}, {"1-i", 1}}, {{"i", 3}}), 1);
  p.add(word_point(g, z1, {{"1-i", -1}}, {{"i", 3}, {"1-i", -1}}), 3);
  EXPECT_TRUE(delta2(p, g).is_zero());
  EXPECT_NEAR(p.bloch_wigner_sum(), 3.6638623767088760, 1e-12);
}

TEST(GaussianWords, WrongClaimRaises) {
  auto g = gaussian_group();
  try {
    MultiplicativeElement::from_word(g, {{"i", 1}}, Complex(1.0, 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::inexpressible);
  }
}

TEST(GaussianWords, ArgumentOfTorsionPart) {
  auto g = gaussian_group();
  auto e = MultiplicativeElement::from_word(g, {{"i", 3}});
  ASSERT_TRUE(e.arg_over_pi());
  EXPECT_EQ(*e.arg_over_pi(), q(-1, 2));
}
