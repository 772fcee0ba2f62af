#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <boost/math/constants/constants.hpp>

#include "scg/period.hpp"

using namespace scg;
using namespace scg::hypgeom;
using namespace scg::period;

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

Rational q(int a, int b = 1) { return Rational(a) / Rational(b); }

using RPoints = std::array<std::array<Rational, 3>, 4>;

const RPoints kCompact = {std::array<Rational, 3>{q(1, 2), q(0), q(0)},
                          {q(0), q(1, 2), q(0)},
                          {q(0), q(0), q(1, 2)},
                          {q(-1, 5), q(-1, 5), q(-1, 5)}};

QuadricSimplexPair pair_from_points(const RPoints& pts, const RMat4& form, int ruling = 1) {
  ProjectiveSimplex s = from_affine(pts);
  QuadricSimplexPair p;
  p.q = form;
  p.ruling = ruling;
  for (int k = 0; k < 4; ++k) p.planes[k] = face_covector(s, k);
  return p;
}

GeodesicSimplex to_simplex(const RPoints& pts) {
  GeodesicSimplex s;
  for (int k = 0; k < 4; ++k) s.vertices[k] = HPoint::finite({to_double(pts[k][0]), to_double(pts[k][1]), to_double(pts[k][2])});
  return s;
}

GeodesicSimplex regular_ideal() {
  const double s = 1.0 / std::sqrt(3.0);
  GeodesicSimplex t;
  t.vertices = {HPoint::ideal({s, s, s}), HPoint::ideal({s, -s, -s}), HPoint::ideal({-s, s, -s}),
                HPoint::ideal({-s, -s, s})};
  return t;
}

RMat4 diag(int a, int b, int c, int d) {
  RMat4 m{};
  for (auto& r : m) r.fill(0);
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  m[3][3] = d;
  return m;
}

}  // namespace

TEST(KleinDensity, Values) {
  EXPECT_EQ(klein_density({0, 0, 0}), 1.0);
  EXPECT_NEAR(klein_density({0.5, 0, 0}), 1.0 / 0.5625, 1e-15);
  try {
    klein_density({1.0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(KleinVolume, RegularIdealTetrahedron) {
  auto r = klein_volume(regular_ideal(), 1e-6);
  EXPECT_NEAR(std::abs(r.value), 1.0149416064096536, 1e-4);
}

TEST(KleinVolume, MatchesIdealFormulaForShapes) {
  for (Complex z : {Complex(0.3, 0.9), Complex(2.0, 0.5)}) {
    GeodesicSimplex t = realize_shape(z);
    EXPECT_NEAR(klein_volume(t, 1e-6).value, ideal_simplex_volume(t), 1e-4) << z;
  }
}

TEST(KleinVolume, OrientationAndDegenerate) {
  GeodesicSimplex t = to_simplex(kCompact);
  double v = klein_volume(t, 1e-9).value;
  t.orientation = -1;
  EXPECT_NEAR(klein_volume(t, 1e-9).value, -v, 1e-12);
  GeodesicSimplex flat;
  flat.vertices = {HPoint::finite({0, 0, 0}), HPoint::finite({0.1, 0, 0}), HPoint::finite({0, 0.1, 0}),
                   HPoint::finite({0.1, 0.1, 0})};
  EXPECT_EQ(klein_volume(flat).value, 0.0);
}

TEST(KleinVolume, AdditiveUnderSubdivision) {
  GeodesicSimplex t = to_simplex(kCompact);
  Vec3 c{0.1, 0.12, 0.08};
  double whole = klein_volume(t, 1e-10).value;
  double parts = 0.0;
  for (int k = 0; k < 4; ++k) {
    GeodesicSimplex p = t;
    p.vertices[k] = HPoint::finite(c);
    parts += klein_volume(p, 1e-10).value;
  }
  EXPECT_NEAR(parts, whole, 1e-9);
}

TEST(CompactVolume, AgreesWithAdaptive) {
  GeodesicSimplex t = to_simplex(kCompact);
  EXPECT_NEAR(compact_volume(t), std::abs(klein_volume(t, 1e-11).value), 1e-10);
}

TEST(Inertia, DiagonalForms) {
  Inertia a = inertia(unit_sphere_form());
  EXPECT_EQ(a.positive, 3);
  EXPECT_EQ(a.negative, 1);
  EXPECT_EQ(a.zero, 0);
  Inertia b = inertia(diag(1, 0, -2, -3));
  EXPECT_EQ(b.positive, 1);
  EXPECT_EQ(b.negative, 2);
  EXPECT_EQ(b.zero, 1);
}

TEST(Period, RatioIsConstantOnCompactSimplices) {
  auto p = pair_from_points(kCompact, unit_sphere_form());
  auto r = period_integral(p, 1e-9);
  double vol = compact_volume(to_simplex(kCompact));
  EXPECT_LT(std::abs(r.value.imag()), 1e-12);
  EXPECT_NEAR(r.value.real() / vol, 1.0 / (4 * kPi * kPi), 1e-9);
  EXPECT_NEAR(period_constant(1), 0.025330295910584444, 1e-17);
}

TEST(Period, ScalingQLeavesFormInvariant) {
  auto p = pair_from_points(kCompact, unit_sphere_form());
  auto p5 = p;
  for (auto& row : p5.q) {
    for (auto& x : row) x *= 5;
  }
  Vec3 x{0.1, -0.05, 0.2};
  EXPECT_NEAR(std::abs(omega_q(p, x) - omega_q(p5, x)), 0.0, 1e-15);
}

TEST(Period, RulingFlipsSign) {
  auto p = pair_from_points(kCompact, unit_sphere_form());
  auto m = p;
  m.ruling = -1;
  EXPECT_NEAR(period_integral(m, 1e-9).value.real(), -period_integral(p, 1e-9).value.real(), 1e-14);
}

TEST(Period, LiteralBranchIsImaginary) {
  auto p = pair_from_points(kCompact, unit_sphere_form());
  Complex w = omega_q(p, {0.1, 0.1, 0.1}, SqrtBranch::literal);
  EXPECT_EQ(w.real(), 0.0);
  try {
    period_integral(p, 1e-6, SqrtBranch::literal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_real);
  }
}

TEST(Period, ScaledQuadricIdealSimplex) {
  QuadricSimplexPair p;
  p.q = diag(-1, 3, 3, 3);
  p.planes = {RVec4{q(1), q(3), q(3), q(3)}, RVec4{q(1), q(3), q(-3), q(-3)}, RVec4{q(1), q(-3), q(3), q(-3)},
              RVec4{q(1), q(-3), q(-3), q(3)}};
  std::array<bool, 4> on{};
  pair_vertices(p, &on);
  for (bool b : on) EXPECT_TRUE(b);
  auto r = period_integral(p, 1e-6);
  EXPECT_NEAR(std::abs(r.value.real()) / period_constant(1), 1.0149416064096536, 1e-4);
  EXPECT_LT(std::abs(r.value.imag()), 1e-6);
}

TEST(Period, StraddlingSimplexIsDomainError) {
  RPoints pts = kCompact;
  pts[0] = {q(3, 2), q(0), q(0)};
  try {
    pair_vertices(pair_from_points(pts, unit_sphere_form()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(Period, QuadricChecks) {
  auto p = pair_from_points(kCompact, diag(1, 1, 1, 1));
  try {
    pair_vertices(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
  p.q = diag(-1, 1, 1, 0);
  try {
    pair_vertices(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate);
  }
  p = pair_from_points(kCompact, unit_sphere_form());
  p.planes[3] = p.planes[2];
  try {
    pair_vertices(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::flat_simplex);
  }
}

TEST(Schlafli, ExtendedAnglesAndLengthsMatchDouble) {
  GeodesicSimplex t = to_simplex(kCompact);
  auto ext = moving_vertex_path(t, 0, {0, 0, 0})(ExtReal(0));
  auto a = dihedral_angles(ext);
  auto l = edge_lengths(ext);
  auto ad = hypgeom::dihedral_angles(t);
  for (int e = 0; e < 6; ++e) {
    EXPECT_NEAR(static_cast<double>(a[e]), ad[e], 1e-13);
    auto [i, j] = kEdges[e];
    EXPECT_NEAR(static_cast<double>(l[e]), hyperbolic_distance(t.vertices[i].x, t.vertices[j].x), 1e-13);
  }
  EXPECT_NEAR(static_cast<double>(compact_volume(ext)), compact_volume(t), 1e-14);
}

TEST(Schlafli, ConstantFamilyHasNoDefect) {
  auto r = schlafli_defect(moving_vertex_path(to_simplex(kCompact), 2, {0, 0, 0}), 0.0, 1e-4);
  EXPECT_EQ(r.dvolume, 0.0);
  EXPECT_EQ(r.defect, 0.0);
}

TEST(Schlafli, DilationFamily) {
  auto path = dilation_path(to_simplex(kCompact));
  auto a = schlafli_defect(path, 0.0, 1e-3);
  auto b = schlafli_defect(path, 0.0, 5e-4);
  EXPECT_LT(a.relative, 1e-4);
  EXPECT_GT(a.dvolume, 0.0);
  EXPECT_NEAR(a.defect / b.defect, 4.0, 0.1);
}

TEST(Schlafli, MovingVertexSecondOrder) {
  auto path = moving_vertex_path(to_simplex(kCompact), 3, {0.05, -0.03, 0.04});
  auto a = schlafli_defect(path, 0.0, 1e-4);
  auto b = schlafli_defect(path, 0.0, 5e-5);
  EXPECT_LT(a.relative, 1e-3);
  EXPECT_NEAR(a.defect / b.defect, 4.0, 0.1);
}

TEST(Schlafli, LeavingTheBallIsDomainError) {
  auto path = moving_vertex_path(to_simplex(kCompact), 0, {1.0, 0.0, 0.0});
  EXPECT_THROW(schlafli_defect(path, 0.45, 0.1), Error);
}
