#include "scg/hypgeom.hpp"

#include <cmath>

#include "scg/polylog.hpp"

namespace scg::hypgeom {

namespace {

using HVec = std::array<double, 4>;

HVec homogeneous(const Vec3& x) { return {1.0, x[0], x[1], x[2]}; }

double det3x3(double a00, double a01, double a02, double a10, double a11, double a12, double a20,
              double a21, double a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
}

/// Covector annihilating a, b, c.
HVec cross4(const HVec& a, const HVec& b, const HVec& c) {
  HVec out{};
  for (int m = 0; m < 4; ++m) {
    int col[3];
    int n = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != m) col[n++] = j;
    }
    double d = det3x3(a[col[0]], a[col[1]], a[col[2]], b[col[0]], b[col[1]], b[col[2]], c[col[0]],
                      c[col[1]], c[col[2]]);
    out[m] = (m % 2 == 0) ? d : -d;
  }
  return out;
}

double dot4(const HVec& a, const HVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

double lorentz_covector(const HVec& a, const HVec& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Face covectors with the opposite vertex on the negative side.
std::array<HVec, 4> outward_faces(const std::array<HVec, 4>& X) {
  std::array<HVec, 4> faces{};
  for (int k = 0; k < 4; ++k) {
    std::array<const HVec*, 3> rest{};
    int n = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != k) rest[n++] = &X[j];
    }
    HVec c = cross4(*rest[0], *rest[1], *rest[2]);
    if (dot4(c, X[k]) > 0) {
      for (double& v : c) v = -v;
    }
    faces[k] = c;
  }
  return faces;
}

/// The two vertices not on edge e.
std::pair<int, int> complement(const Edge& e) {
  int k = -1;
  int l = -1;
  for (int j = 0; j < 4; ++j) {
    if (j == e.first || j == e.second) continue;
    if (k < 0) {
      k = j;
    } else {
      l = j;
    }
  }
  return {k, l};
}

double clamp_unit(double c) { return std::max(-1.0, std::min(1.0, c)); }

}  // namespace

int edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int e = 0; e < 6; ++e) {
    if (kEdges[e].first == i && kEdges[e].second == j) return e;
  }
  throw Error(ErrorKind::domain, "no edge between vertices " + std::to_string(i) + " and " + std::to_string(j));
}

void validate(const HPoint& p) {
  for (double c : p.x) {
    if (!std::isfinite(c)) throw Error(ErrorKind::domain, "non-finite point coordinate");
  }
  double r2 = dot(p.x, p.x);
  if (p.kind == PointKind::finite && r2 >= 1.0) {
    throw Error(ErrorKind::domain, "finite point outside the open unit ball");
  }
  if (p.kind == PointKind::ideal && std::abs(std::sqrt(r2) - 1.0) > 1e-12) {
    throw Error(ErrorKind::domain, "ideal point off the unit sphere");
  }
}

void validate(const GeodesicSimplex& s) {
  for (const auto& v : s.vertices) validate(v);
  if (s.orientation != 1 && s.orientation != -1) throw Error(ErrorKind::domain, "orientation must be +1 or -1");
}

ProjectivePoint cross_ratio(const ProjectivePoint& x1, const ProjectivePoint& x2, const ProjectivePoint& x3,
                            const ProjectivePoint& x4) {
  const std::array<const ProjectivePoint*, 4> pts = {&x1, &x2, &x3, &x4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto& a = *pts[i];
      const auto& b = *pts[j];
      if ((a.infinite && b.infinite) || (!a.infinite && !b.infinite && a.value == b.value)) {
        throw Error(ErrorKind::degenerate, "cross-ratio of coincident points");
      }
    }
  }
  if (x1.infinite) return (x2.value - x4.value) / (x2.value - x3.value);
  if (x2.infinite) return (x1.value - x3.value) / (x1.value - x4.value);
  if (x3.infinite) return (x2.value - x4.value) / (x1.value - x4.value);
  if (x4.infinite) return (x1.value - x3.value) / (x2.value - x3.value);
  return (x1.value - x3.value) * (x2.value - x4.value) / ((x1.value - x4.value) * (x2.value - x3.value));
}

ProjectivePoint boundary_coordinate(const Vec3& v) {
  double denom = 1.0 - v[2];
  if (std::abs(denom) < 1e-15) return ProjectivePoint::at_infinity();
  return Complex(v[0], -v[1]) / denom;
}

Vec3 boundary_point(const ProjectivePoint& w) {
  if (w.infinite) return {0.0, 0.0, 1.0};
  double m = std::norm(w.value);
  return {2.0 * w.value.real() / (m + 1.0), -2.0 * w.value.imag() / (m + 1.0), (m - 1.0) / (m + 1.0)};
}

double hyperbolic_distance(const Vec3& p, const Vec3& q) {
  validate(HPoint::finite(p));
  validate(HPoint::finite(q));
  Vec3 d = q - p;
  double a = dot(d, d);
  if (a == 0.0) return 0.0;
  double b = 2.0 * dot(p, d);
  double c = dot(p, p) - 1.0;
  double disc = std::sqrt(b * b - 4.0 * a * c);
  // Stable roots of a t^2 + b t + c = 0 with c < 0, so t1 < 0 < 1 < t2.
  double qq = -0.5 * (b + std::copysign(disc, b));
  double r1 = qq / a;
  double r2 = c / qq;
  double t1 = std::min(r1, r2);
  double t2 = std::max(r1, r2);
  double r = (t1 * (t2 - 1.0)) / ((t1 - 1.0) * t2);
  return 0.5 * std::abs(std::log(r));
}

Complex ideal_shape(const std::array<Vec3, 4>& v) {
  for (const auto& p : v) validate(HPoint::ideal(p));
  ProjectivePoint r = cross_ratio(boundary_coordinate(v[0]), boundary_coordinate(v[1]), boundary_coordinate(v[2]),
                                  boundary_coordinate(v[3]));
  if (r.infinite) throw Error(ErrorKind::degenerate, "ideal shape at infinity");
  return r.value;
}

GeodesicSimplex realize_shape(const Complex& z) {
  if (z.imag() == 0.0) throw Error(ErrorKind::flat_simplex, "real shape parameter gives a flat simplex");
  GeodesicSimplex s;
  s.vertices[0] = HPoint::ideal(boundary_point(ProjectivePoint::at_infinity()));
  s.vertices[1] = HPoint::ideal(boundary_point(Complex(0.0)));
  s.vertices[2] = HPoint::ideal(boundary_point(Complex(1.0)));
  s.vertices[3] = HPoint::ideal(boundary_point(z));
  s.orientation = 1;
  return s;
}

double euclidean_orientation_det(const GeodesicSimplex& s) {
  const auto& v = s.vertices;
  return det3(v[1].x - v[0].x, v[2].x - v[0].x, v[3].x - v[0].x);
}

bool is_degenerate(const GeodesicSimplex& s, double tol) {
  double scale = 1.0;
  for (int e = 0; e < 6; ++e) {
    scale = std::max(scale, norm(s.vertices[kEdges[e].first].x - s.vertices[kEdges[e].second].x));
  }
  return std::abs(euclidean_orientation_det(s)) <= tol * scale * scale * scale;
}

std::array<double, 6> dihedral_angles(const GeodesicSimplex& s) {
  validate(s);
  if (is_degenerate(s)) throw Error(ErrorKind::degenerate, "dihedral angles of a degenerate simplex");
  std::array<HVec, 4> X{};
  for (int k = 0; k < 4; ++k) X[k] = homogeneous(s.vertices[k].x);
  auto faces = outward_faces(X);
  std::array<double, 6> angles{};
  for (int e = 0; e < 6; ++e) {
    auto [k, l] = complement(kEdges[e]);
    double nk = std::sqrt(lorentz_covector(faces[k], faces[k]));
    double nl = std::sqrt(lorentz_covector(faces[l], faces[l]));
    angles[e] = std::acos(clamp_unit(-lorentz_covector(faces[k], faces[l]) / (nk * nl)));
  }
  return angles;
}

std::array<double, 6> spherical_dihedral_angles(const std::array<Vec4, 4>& u) {
  spherical_edge_lengths(u);
  auto faces = outward_faces(u);
  std::array<double, 6> angles{};
  for (int e = 0; e < 6; ++e) {
    auto [k, l] = complement(kEdges[e]);
    double nk = std::sqrt(dot4(faces[k], faces[k]));
    double nl = std::sqrt(dot4(faces[l], faces[l]));
    if (nk == 0.0 || nl == 0.0) throw Error(ErrorKind::degenerate, "spherical simplex spans a great sphere");
    angles[e] = std::acos(clamp_unit(-dot4(faces[k], faces[l]) / (nk * nl)));
  }
  return angles;
}

std::array<double, 6> spherical_edge_lengths(const std::array<Vec4, 4>& u) {
  for (const auto& v : u) {
    if (std::abs(std::sqrt(dot4(v, v)) - 1.0) > 1e-12) throw Error(ErrorKind::domain, "spherical vertex not a unit vector");
  }
  std::array<double, 6> out{};
  for (int e = 0; e < 6; ++e) {
    double c = dot4(u[kEdges[e].first], u[kEdges[e].second]);
    if (std::abs(std::abs(c) - 1.0) < 1e-14) {
      throw Error(ErrorKind::degenerate, "coincident or antipodal spherical vertices");
    }
    out[e] = std::acos(clamp_unit(c));
  }
  HVec d = cross4(u[1], u[2], u[3]);
  if (std::abs(dot4(d, u[0])) < 1e-14) throw Error(ErrorKind::degenerate, "spherical simplex spans a great sphere");
  return out;
}

double edge_length(const GeodesicSimplex& s, const Edge& e, const HoroballAssignment& h) {
  validate(s);
  const HPoint& a = s.vertices[e.first];
  const HPoint& b = s.vertices[e.second];
  auto horoball = [&](int idx) {
    auto it = h.find(idx);
    if (it == h.end()) throw Error(ErrorKind::missing_horoball, "ideal vertex " + std::to_string(idx) + " has no horoball");
    if (!(it->second > 0.0)) throw Error(ErrorKind::domain, "horoball parameter must be positive");
    return it->second;
  };
  if (!a.is_ideal() && !b.is_ideal()) return hyperbolic_distance(a.x, b.x);
  if (a.is_ideal() && b.is_ideal()) {
    double ha = horoball(e.first);
    double hb = horoball(e.second);
    return std::log((1.0 - dot(a.x, b.x)) / (2.0 * ha * hb));
  }
  const HPoint& fin = a.is_ideal() ? b : a;
  const HPoint& ide = a.is_ideal() ? a : b;
  double hv = horoball(a.is_ideal() ? e.first : e.second);
  return std::log((1.0 - dot(fin.x, ide.x)) / (hv * std::sqrt(1.0 - dot(fin.x, fin.x))));
}

double ideal_volume(const Complex& z) {
  if (z.imag() == 0.0) throw Error(ErrorKind::flat_simplex, "real shape parameter gives a flat simplex");
  return polylog::bloch_wigner(z);
}

double ideal_simplex_volume(const GeodesicSimplex& s) {
  std::array<Vec3, 4> v{};
  for (int k = 0; k < 4; ++k) {
    if (!s.vertices[k].is_ideal()) throw Error(ErrorKind::domain, "closed-form volume needs four ideal vertices");
    v[k] = s.vertices[k].x;
  }
  if (is_degenerate(s)) return 0.0;
  return s.orientation * polylog::bloch_wigner(ideal_shape(v));
}

// Exact projective geometry --------------------------------------------------

ProjectiveSimplex from_affine(const std::array<std::array<Rational, 3>, 4>& points) {
  ProjectiveSimplex s;
  for (int k = 0; k < 4; ++k) s.vertices[k] = {Rational(1), points[k][0], points[k][1], points[k][2]};
  return s;
}

RVec4 normalize(const RVec4& v) {
  for (const auto& c : v) {
    if (c != 0) {
      Rational lead = c;
      RVec4 out;
      for (int i = 0; i < 4; ++i) out[i] = v[i] / lead;
      return out;
    }
  }
  throw Error(ErrorKind::degenerate, "zero homogeneous vector");
}

namespace {

Rational det3r(const Rational& a00, const Rational& a01, const Rational& a02, const Rational& a10, const Rational& a11,
               const Rational& a12, const Rational& a20, const Rational& a21, const Rational& a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) + a02 * (a10 * a21 - a11 * a20);
}

RVec4 cross4r(const RVec4& a, const RVec4& b, const RVec4& c) {
  RVec4 out;
  for (int m = 0; m < 4; ++m) {
    int col[3];
    int n = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != m) col[n++] = j;
    }
    Rational d = det3r(a[col[0]], a[col[1]], a[col[2]], b[col[0]], b[col[1]], b[col[2]], c[col[0]], c[col[1]],
                       c[col[2]]);
    out[m] = (m % 2 == 0) ? d : Rational(-d);
  }
  return out;
}

Rational bilinear(const RVec4& a, const RMat4& m, const RVec4& b) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) s += a[i] * m[i][j] * b[j];
  }
  return s;
}

RVec4 mat_vec(const RMat4& m, const RVec4& v) {
  RVec4 out;
  for (int i = 0; i < 4; ++i) {
    out[i] = 0;
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

}  // namespace

RVec4 face_covector(const ProjectiveSimplex& s, int k) {
  std::array<const RVec4*, 3> rest{};
  int n = 0;
  for (int j = 0; j < 4; ++j) {
    if (j != k) rest[n++] = &s.vertices[j];
  }
  return cross4r(*rest[0], *rest[1], *rest[2]);
}

Rational determinant(const RMat4& m) {
  RMat4 a = m;
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && a[p][c] == 0) ++p;
    if (p == 4) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

RMat4 inverse(const RMat4& m) {
  RMat4 a = m;
  RMat4 inv{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) inv[i][j] = (i == j) ? 1 : 0;
  }
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && a[p][c] == 0) ++p;
    if (p == 4) throw Error(ErrorKind::degenerate, "singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (int k = 0; k < 4; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 4; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

ProjectiveSimplex polar_dual(const ProjectiveSimplex& s, const RMat4& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (q[i][j] != q[j][i]) throw Error(ErrorKind::domain, "quadratic form must be symmetric");
    }
  }
  if (determinant(q) == 0) throw Error(ErrorKind::degenerate, "singular quadratic form");
  RMat4 vm;
  for (int k = 0; k < 4; ++k) vm[k] = s.vertices[k];
  if (determinant(vm) == 0) throw Error(ErrorKind::degenerate, "vertices are projectively dependent");
  for (int k = 0; k < 4; ++k) {
    if (bilinear(s.vertices[k], q, s.vertices[k]) == 0) {
      throw Error(ErrorKind::tangency, "vertex " + std::to_string(k) + " lies on the quadric");
    }
  }
  RMat4 qinv = inverse(q);
  ProjectiveSimplex dual;
  for (int k = 0; k < 4; ++k) {
    RVec4 c = face_covector(s, k);
    if (bilinear(c, qinv, c) == 0) {
      throw Error(ErrorKind::tangency, "face opposite vertex " + std::to_string(k) + " is tangent to the quadric");
    }
    dual.vertices[k] = normalize(mat_vec(qinv, c));
  }
  return dual;
}

RMat4 unit_sphere_form() {
  RMat4 q{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) q[i][j] = 0;
  }
  q[0][0] = -1;
  q[1][1] = q[2][2] = q[3][3] = 1;
  return q;
}

}  // namespace scg::hypgeom
