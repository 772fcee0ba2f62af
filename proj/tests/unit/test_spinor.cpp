#include <gtest/gtest.h>

#include <random>

#include "scg/spinor.hpp"

using namespace scg;
using namespace scg::spinor;

namespace {

Rational q(int a, int b = 1) { return Rational(a) / Rational(b); }

Rational factorial(int n) { return n <= 1 ? Rational(1) : Rational(n) * factorial(n - 1); }

/// Str(rho(diag(t, -t))^k) from the weights 1/2 sum_i eps_i t_i of the
/// diagonal action, eps_i = +1 for i in S, -1 otherwise, sign (-1)^|S|.
Rational cartan_supertrace(const std::vector<Rational>& t, int k) {
  int n = static_cast<int>(t.size());
  Rational sum = 0;
  for (int s = 0; s < (1 << n); ++s) {
    Rational w = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i) {
      bool in = (s >> i) & 1;
      bits += in;
      w += in ? Rational(t[i] / 2) : Rational(-t[i] / 2);
    }
    Rational p = 1;
    for (int j = 0; j < k; ++j) p *= w;
    sum += bits % 2 == 0 ? p : -p;
  }
  return sum;
}

}  // namespace

TEST(Matrices, PfaffianSquaredIsDeterminant) {
  std::mt19937_64 rng(41);
  for (std::size_t size : {2u, 4u, 6u}) {
    for (int k = 0; k < 10; ++k) {
      Matrix a = random_skew(size, rng);
      Rational pf = pfaffian(a);
      EXPECT_EQ(pf * pf, determinant(a));
    }
  }
}

TEST(Matrices, PfaffianOfStandardForm) {
  Matrix a = zero_matrix(2, 2);
  a[0][1] = q(3);
  a[1][0] = q(-3);
  EXPECT_EQ(pfaffian(a), q(3));
  Matrix odd = zero_matrix(3, 3);
  try {
    pfaffian(odd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(SplitSo, ValidateRejectsNonSkewBlocks) {
  SplitSoElement x = SplitSoElement::cartan({q(1), q(2)});
  x.b[0][1] = q(1);
  try {
    x.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(SplitSo, MatrixRoundTripAndBracket) {
  std::mt19937_64 rng(42);
  SplitSoElement x = random_element(3, rng);
  SplitSoElement y = random_element(3, rng);
  SplitSoElement back = SplitSoElement::from_matrix(x.matrix());
  EXPECT_EQ(back.matrix(), x.matrix());
  EXPECT_EQ(bracket(x, y).matrix(), commutator(x.matrix(), y.matrix()));
}

TEST(Clifford, CanonicalAnticommutationRelations) {
  const int n = 3;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SuperOperator xi = wedge_operator(n, i);
      SuperOperator dj = contraction_operator(n, j);
      Matrix anti = add((xi * dj).m, (dj * xi).m);
      Matrix expect = i == j ? SuperOperator::identity(n).m : zero_matrix(8, 8);
      EXPECT_EQ(anti, expect) << i << j;
      SuperOperator xj = wedge_operator(n, j);
      EXPECT_EQ(add((xi * xj).m, (xj * xi).m), zero_matrix(8, 8));
    }
  }
}

TEST(SpinRep, IsLieAlgebraHomomorphism) {
  std::mt19937_64 rng(43);
  for (int n : {2, 3, 4}) {
    for (int k = 0; k < 5; ++k) {
      SplitSoElement x = random_element(n, rng);
      SplitSoElement y = random_element(n, rng);
      SuperOperator rx = spin_rep(x);
      SuperOperator ry = spin_rep(y);
      EXPECT_EQ(rx * ry - ry * rx, spin_rep(bracket(x, y)));
    }
  }
}

TEST(SpinRep, CommutesWithParity) {
  std::mt19937_64 rng(44);
  SuperOperator r = spin_rep(random_element(3, rng));
  SuperOperator p = SuperOperator::parity(3);
  EXPECT_EQ(r * p, p * r);
}

TEST(PfSplit, CartanElement) {
  EXPECT_EQ(pf_split(SplitSoElement::cartan({q(2), q(3)})), q(6));
  EXPECT_EQ(pf_split(SplitSoElement::cartan({q(1, 2), q(-3), q(5)})), q(-15, 2));
}

TEST(PfSplit, SquareIsSignedDeterminant) {
  std::mt19937_64 rng(45);
  for (int n : {2, 3}) {
    for (int k = 0; k < 5; ++k) {
      SplitSoElement x = random_element(n, rng);
      Rational pf = pf_split(x);
      Rational det = determinant(x.matrix());
      EXPECT_EQ(pf * pf, n % 2 == 0 ? det : -det);
    }
  }
}

TEST(Supertrace, CartanMatchesWeightOracle) {
  std::vector<Rational> t = {q(1, 2), q(2), q(-3)};
  SuperOperator r = spin_rep(SplitSoElement::cartan(t));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(supertrace(r.pow(k)), cartan_supertrace(t, k)) << k;
}

TEST(Supertrace, VanishesBelowRankAndForWrongParity) {
  std::mt19937_64 rng(46);
  for (int n : {2, 3}) {
    SuperOperator r = spin_rep(random_element(n, rng));
    for (int k = 0; k <= 7; ++k) {
      if (k < n || (k - n) % 2 != 0) EXPECT_EQ(supertrace(r.pow(k)), Rational(0)) << n << " " << k;
    }
  }
}

TEST(Supertrace, OddPowerAtOrAboveRankNeedNotVanish) {
  std::vector<Rational> t = {q(1), q(2), q(3)};
  SuperOperator r = spin_rep(SplitSoElement::cartan(t));
  EXPECT_NE(supertrace(r.pow(3)), Rational(0));
  EXPECT_NE(supertrace(r.pow(5)), Rational(0));
}

TEST(PfIdentity, ConstantRatioEqualsCartanRatio) {
  std::mt19937_64 rng(47);
  for (int n : {2, 3}) {
    std::vector<Rational> t;
    for (int i = 0; i < n; ++i) t.push_back(q(i + 2));
    Rational expect = pf_identity_check(SplitSoElement::cartan(t)).ratio;
    EXPECT_EQ(expect, cartan_supertrace(t, n) / (factorial(n) * q((n == 2) ? 6 : 24)));
    int checked = 0;
    for (int k = 0; k < 20 && checked < 8; ++k) {
      SplitSoElement x = random_element(n, rng);
      if (pf_split(x) == 0) continue;
      EXPECT_EQ(pf_identity_check(x).ratio, expect);
      ++checked;
    }
    EXPECT_GE(checked, 5);
  }
}

TEST(PfIdentity, MeasuredConstants) {
  EXPECT_EQ(pf_identity_check(SplitSoElement::cartan({q(1), q(1)})).ratio, q(1));
  EXPECT_EQ(pf_identity_check(SplitSoElement::cartan({q(1), q(1), q(1)})).ratio, q(-1));
}

TEST(PfIdentity, ZeroPfaffianIsIndeterminate) {
  try {
    pf_identity_check(SplitSoElement::cartan({q(0), q(1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate);
  }
}
