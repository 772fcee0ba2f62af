#include "scg/period.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/constants/constants.hpp>

namespace scg::period {

namespace {

using hypgeom::RMat4;
using hypgeom::RVec4;
using RMatrix = std::vector<std::vector<Rational>>;

constexpr double kPi = boost::math::constants::pi<double>();

/// Coefficients c_0..c_n of det(lambda I - A) by Faddeev-LeVerrier.
std::vector<Rational> char_poly(const RMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RMatrix m(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    RMatrix next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

int sign_changes(const std::vector<Rational>& c) {
  int changes = 0;
  int last = 0;
  for (const auto& v : c) {
    int s = v.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Inertia inertia_of(const RMatrix& a) {
  std::vector<Rational> c = char_poly(a);
  Inertia r;
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  r.zero = static_cast<int>(first);
  std::vector<Rational> trimmed(c.begin() + static_cast<long>(first), c.end());
  r.positive = sign_changes(trimmed);
  std::vector<Rational> flipped = trimmed;
  for (std::size_t k = 0; k < flipped.size(); ++k) {
    if ((k + first) % 2 == 1) flipped[k] = -flipped[k];
  }
  r.negative = sign_changes(flipped);
  return r;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Null vector of three covectors in 4-space (signed 3x3 minors).
RVec4 meet(const RVec4& a, const RVec4& b, const RVec4& c) {
  RVec4 out;
  for (int col = 0; col < 4; ++col) {
    std::array<std::array<Rational, 3>, 3> m;
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == col) continue;
      m[0][k] = a[j];
      m[1][k] = b[j];
      m[2][k] = c[j];
      ++k;
    }
    Rational d = det3(m);
    out[col] = (col % 2 == 0) ? d : Rational(-d);
  }
  return out;
}

Rational quad_form(const RMat4& q, const RVec4& v) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) s += v[i] * q[i][j] * v[j];
  }
  return s;
}

double quad_chart(const RMat4& q, const Vec3& x) {
  std::array<double, 4> v{1.0, x[0], x[1], x[2]};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) s += v[i] * to_double(q[i][j]) * v[j];
  }
  return s;
}

/// Ball-side sign of the quadric: the sign of its single minority eigenvalue.
int ball_sign(const RMat4& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (q[i][j] != q[j][i]) throw Error(ErrorKind::domain, "quadric matrix is not symmetric");
    }
  }
  RMatrix full(4, std::vector<Rational>(4));
  RMatrix block(3, std::vector<Rational>(3));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      full[i][j] = q[i][j];
      if (i > 0 && j > 0) block[i - 1][j - 1] = q[i][j];
    }
  }
  Inertia in = inertia_of(full);
  if (in.zero != 0) throw Error(ErrorKind::degenerate, "quadric is singular");
  int sigma = 0;
  if (in.positive == 3 && in.negative == 1) sigma = -1;
  if (in.positive == 1 && in.negative == 3) sigma = 1;
  if (sigma == 0) throw Error(ErrorKind::domain, "quadric does not have signature (3,1)");
  Inertia b = inertia_of(block);
  bool definite = sigma < 0 ? b.positive == 3 : b.negative == 3;
  if (!definite) throw Error(ErrorKind::domain, "ball component is not bounded in the chart x_0 = 1");
  return sigma;
}

Vec3 chart(const RVec4& v) {
  if (v[0] == 0) throw Error(ErrorKind::domain, "simplex vertex lies at infinity of the chart x_0 = 1");
  return {to_double(Rational(v[1] / v[0])), to_double(Rational(v[2] / v[0])), to_double(Rational(v[3] / v[0]))};
}

double klein_density_unchecked(const Vec3& x) {
  double d = 1.0 - dot(x, x);
  if (d <= 0.0) d = std::numeric_limits<double>::min();
  return 1.0 / (d * d);
}

quadrature::Tetrahedron points_of(const hypgeom::GeodesicSimplex& s) {
  return {s.vertices[0].x, s.vertices[1].x, s.vertices[2].x, s.vertices[3].x};
}

}  // namespace

double klein_density(const Vec3& x) {
  double d = 1.0 - dot(x, x);
  if (d <= 0.0) throw Error(ErrorKind::domain, "point is not inside the unit ball");
  return 1.0 / (d * d);
}

quadrature::Report klein_volume(const hypgeom::GeodesicSimplex& s, double tol, const quadrature::Options& base) {
  hypgeom::validate(s);
  if (hypgeom::is_degenerate(s)) return {};
  quadrature::Options opt = base;
  opt.rel_tol = tol;
  std::array<bool, 4> singular{};
  for (int k = 0; k < 4; ++k) singular[k] = s.vertices[k].is_ideal();
  quadrature::Report r = quadrature::integrate(klein_density_unchecked, points_of(s), singular, opt);
  double sign = hypgeom::euclidean_orientation_det(s) > 0.0 ? 1.0 : -1.0;
  r.value *= sign * s.orientation;
  return r;
}

double compact_volume(const hypgeom::GeodesicSimplex& s, int points) {
  hypgeom::validate(s);
  for (const auto& v : s.vertices) {
    if (v.is_ideal()) throw Error(ErrorKind::domain, "compact volume needs finite vertices");
  }
  return quadrature::conical_gauss(klein_density, points_of(s), points);
}

Inertia inertia(const RMat4& q) {
  RMatrix m(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = q[i][j];
  }
  return inertia_of(m);
}

std::array<Vec3, 4> pair_vertices(const QuadricSimplexPair& p, std::array<bool, 4>* on_quadric) {
  if (p.ruling != 1 && p.ruling != -1) throw Error(ErrorKind::domain, "ruling must be +1 or -1");
  int sigma = ball_sign(p.q);
  if (hypgeom::determinant(p.planes) == 0) throw Error(ErrorKind::flat_simplex, "face planes are dependent");
  std::array<Vec3, 4> out;
  for (int k = 0; k < 4; ++k) {
    std::array<int, 3> idx{};
    int n = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != k) idx[n++] = j;
    }
    RVec4 v = meet(p.planes[idx[0]], p.planes[idx[1]], p.planes[idx[2]]);
    int side = quad_form(p.q, v).sign() * sigma;
    if (side < 0) throw Error(ErrorKind::domain, "simplex vertex " + std::to_string(k) + " lies outside the ball");
    if (on_quadric) (*on_quadric)[k] = side == 0;
    out[k] = chart(v);
  }
  return out;
}

std::complex<double> omega_q(const QuadricSimplexPair& p, const Vec3& x, SqrtBranch branch) {
  double qx = quad_chart(p.q, x);
  if (qx == 0.0) throw Error(ErrorKind::tangency, "point lies on the quadric");
  double det = to_double(hypgeom::determinant(p.q));
  std::complex<double> root = branch == SqrtBranch::real ? std::complex<double>(std::sqrt(std::abs(det)), 0.0)
                                                         : std::sqrt(std::complex<double>(det, 0.0));
  return static_cast<double>(p.ruling) * root / (4.0 * kPi * kPi * qx * qx);
}

PeriodReport period_integral(const QuadricSimplexPair& p, double tol, SqrtBranch branch,
                             const quadrature::Options& base) {
  std::array<bool, 4> singular{};
  std::array<Vec3, 4> v = pair_vertices(p, &singular);
  quadrature::Options opt = base;
  opt.rel_tol = tol;
  auto f = [&](const Vec3& x) {
    double qx = quad_chart(p.q, x);
    return 1.0 / (qx * qx);
  };
  quadrature::Report r = quadrature::integrate(f, v, singular, opt);
  double det = to_double(hypgeom::determinant(p.q));
  std::complex<double> root = branch == SqrtBranch::real ? std::complex<double>(std::sqrt(std::abs(det)), 0.0)
                                                         : std::sqrt(std::complex<double>(det, 0.0));
  std::complex<double> factor = static_cast<double>(p.ruling) * root / (4.0 * kPi * kPi);
  PeriodReport out;
  out.value = factor * r.value;
  out.error = std::abs(factor) * r.error;
  out.evaluations = r.evaluations;
  out.method = r.method;
  if (std::abs(out.value.imag()) > tol * std::abs(out.value)) {
    throw Error(ErrorKind::non_real, "period is not real (imaginary part " + std::to_string(out.value.imag()) + ")");
  }
  return out;
}

double period_constant(int ruling) { return static_cast<double>(ruling) / (4.0 * kPi * kPi); }

namespace {

using quadrature::ExtTetrahedron;
using ExtVec4 = std::array<ExtReal, 4>;

ExtVec3 to_ext(const Vec3& v) { return {ExtReal(v[0]), ExtReal(v[1]), ExtReal(v[2])}; }

ExtReal ext_dot(const ExtVec3& a, const ExtVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

ExtReal det3(const std::array<std::array<ExtReal, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Covector vanishing on a, b, c (cofactor expansion).
ExtVec4 cross4(const ExtVec4& a, const ExtVec4& b, const ExtVec4& c) {
  ExtVec4 out;
  for (int i = 0; i < 4; ++i) {
    std::array<std::array<ExtReal, 3>, 3> m;
    for (int col = 0, n = 0; col < 4; ++col) {
      if (col == i) continue;
      m[0][n] = a[col];
      m[1][n] = b[col];
      m[2][n] = c[col];
      ++n;
    }
    out[i] = (i % 2 == 0 ? 1 : -1) * det3(m);
  }
  return out;
}

ExtReal dual_form(const ExtVec4& f, const ExtVec4& g) { return -f[0] * g[0] + f[1] * g[1] + f[2] * g[2] + f[3] * g[3]; }

void check_compact(const ExtTetrahedron& t) {
  for (const auto& v : t) {
    if (ext_dot(v, v) >= 1) throw Error(ErrorKind::domain, "point is not inside the unit ball");
  }
}

}  // namespace

SimplexPath moving_vertex_path(const hypgeom::GeodesicSimplex& s, int k, const Vec3& d) {
  if (k < 0 || k > 3) throw Error(ErrorKind::domain, "vertex index must be 0..3");
  ExtTetrahedron base;
  for (int i = 0; i < 4; ++i) base[i] = to_ext(s.vertices[i].x);
  ExtVec3 dir = to_ext(d);
  return [base, dir, k](const ExtReal& t) {
    ExtTetrahedron m = base;
    for (int c = 0; c < 3; ++c) m[k][c] += t * dir[c];
    return m;
  };
}

SimplexPath dilation_path(const hypgeom::GeodesicSimplex& s) {
  ExtTetrahedron base;
  ExtVec3 centre{0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    base[i] = to_ext(s.vertices[i].x);
    for (int c = 0; c < 3; ++c) centre[c] += base[i][c] / 4;
  }
  return [base, centre](const ExtReal& t) {
    ExtTetrahedron m = base;
    for (auto& v : m) {
      for (int c = 0; c < 3; ++c) v[c] = centre[c] + (1 + t) * (v[c] - centre[c]);
    }
    return m;
  };
}

ExtReal compact_volume(const ExtTetrahedron& t) {
  check_compact(t);
  return quadrature::conical_gauss(
      [](const ExtVec3& x) {
        ExtReal d = 1 - ext_dot(x, x);
        return 1 / (d * d);
      },
      t, 30);
}

std::array<ExtReal, 6> dihedral_angles(const ExtTetrahedron& t) {
  check_compact(t);
  std::array<ExtVec4, 4> X;
  for (int k = 0; k < 4; ++k) X[k] = {ExtReal(1), t[k][0], t[k][1], t[k][2]};
  std::array<ExtVec4, 4> faces;
  for (int k = 0; k < 4; ++k) {
    std::array<int, 3> idx{};
    for (int j = 0, n = 0; j < 4; ++j) {
      if (j != k) idx[n++] = j;
    }
    faces[k] = cross4(X[idx[0]], X[idx[1]], X[idx[2]]);
    ExtReal side = faces[k][0] * X[k][0] + faces[k][1] * X[k][1] + faces[k][2] * X[k][2] + faces[k][3] * X[k][3];
    if (side == 0) throw Error(ErrorKind::degenerate, "dihedral angles of a degenerate simplex");
    if (side < 0) {
      for (auto& c : faces[k]) c = -c;
    }
  }
  std::array<ExtReal, 6> out;
  for (int e = 0; e < 6; ++e) {
    auto [i, j] = hypgeom::kEdges[e];
    std::array<int, 2> kl{};
    for (int m = 0, n = 0; m < 4; ++m) {
      if (m != i && m != j) kl[n++] = m;
    }
    const ExtVec4& f = faces[kl[0]];
    const ExtVec4& g = faces[kl[1]];
    out[e] = acos(-dual_form(f, g) / sqrt(dual_form(f, f) * dual_form(g, g)));
  }
  return out;
}

std::array<ExtReal, 6> edge_lengths(const ExtTetrahedron& t) {
  check_compact(t);
  std::array<ExtReal, 6> out;
  for (int e = 0; e < 6; ++e) {
    const ExtVec3& p = t[hypgeom::kEdges[e].first];
    const ExtVec3& q = t[hypgeom::kEdges[e].second];
    ExtReal c = (1 - ext_dot(p, q)) / sqrt((1 - ext_dot(p, p)) * (1 - ext_dot(q, q)));
    out[e] = c <= 1 ? ExtReal(0) : acosh(c);
  }
  return out;
}

SchlafliReport schlafli_defect(const SimplexPath& path, double t0, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::domain, "step must be positive");
  const ExtReal t(t0);
  const ExtReal h(step);
  ExtTetrahedron lo = path(t - h);
  ExtTetrahedron hi = path(t + h);
  ExtReal dv = (compact_volume(hi) - compact_volume(lo)) / (2 * h);
  auto a_lo = dihedral_angles(lo);
  auto a_hi = dihedral_angles(hi);
  auto len = edge_lengths(path(t));
  ExtReal sum = 0;
  for (int e = 0; e < 6; ++e) sum += len[e] * (a_hi[e] - a_lo[e]) / (2 * h);
  SchlafliReport r;
  r.dvolume = static_cast<double>(dv);
  r.schlafli_sum = static_cast<double>(-sum / 2);
  ExtReal defect = abs(dv + sum / 2);
  r.defect = static_cast<double>(defect);
  r.relative = dv != 0 ? static_cast<double>(defect / abs(dv)) : r.defect;
  return r;
}

}  // namespace scg::period
