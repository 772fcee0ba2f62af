#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "scg/pslq.hpp"

using namespace scg;

TEST(Pslq, FindsSmallRelation) {
  double r2 = std::sqrt(2.0);
  auto rel = pslq::find_relation<double>({1.0, r2, 3.0 - 2.0 * r2});
  ASSERT_TRUE(rel);
  auto c = *rel;
  EXPECT_NEAR(c[0] + c[1] * r2 + c[2] * (3.0 - 2.0 * r2), 0.0, 1e-12);
  EXPECT_NE(c[2], 0);
}

TEST(Pslq, LogarithmsOfIntegers) {
  auto rel = pslq::find_relation<ExtReal>({log(ExtReal(2)), log(ExtReal(3)), log(ExtReal(6))}, {1e-40, 10, 2000});
  ASSERT_TRUE(rel);
  auto c = *rel;
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[0], -c[2]);
}

TEST(Pslq, NoRelationForIndependentValues) {
  double pi = boost::math::constants::pi<double>();
  EXPECT_FALSE(pslq::find_relation<double>({1.0, pi, std::log(2.0)}, {1e-12, 20, 2000}));
}

TEST(RationalBasis, Coordinates) {
  pslq::RationalBasis basis;
  basis.seed(std::log(2.0));
  auto c = basis.coordinates(1.5 * std::log(2.0));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], Rational(3) / 2);
  auto d = basis.coordinates(std::log(3.0));
  ASSERT_EQ(basis.basis().size(), 2u);
  EXPECT_EQ(d[0], Rational(0));
  EXPECT_EQ(d[1], Rational(1));
  auto e = basis.coordinates(std::log(6.0) - std::log(8.0) / 4.0);
  EXPECT_EQ(e[0], Rational(1) / 4);
  EXPECT_EQ(e[1], Rational(1));
}
