#pragma once

// Klein-model hyperbolic 3-space: points, geodesic simplices, cross-ratios,
// ideal shapes, dihedral angles, horoball-truncated lengths, polar duality.
//
// Curvature is -1. The distance of two finite points is half the absolute
// logarithm of the chord cross-ratio, so d(0, (t,0,0)) = artanh t.
//
// The sphere at infinity is identified with the complex projective line by
// w = (x - i y) / (1 - z), which sends the north pole (0,0,1) to infinity.
// With this chart a positively oriented ideal simplex (positive Euclidean
// determinant of edge vectors) has a shape in the upper half plane.
//
// A horoball at an ideal vertex v is given by h > 0: its horosphere is
// { X : -<X, (1, v) / h> = 1 } in the hyperboloid model. h = 1 passes
// through the origin; doubling h moves the horosphere by log 2 towards the
// opposite end, so every truncated length at v drops by log 2.

#include <array>
#include <map>
#include <utility>

#include "scg/numeric.hpp"

namespace scg::hypgeom {

enum class PointKind { finite, ideal };

struct HPoint {
  Vec3 x{};
  PointKind kind = PointKind::finite;

  static HPoint finite(const Vec3& x) { return {x, PointKind::finite}; }
  static HPoint ideal(const Vec3& x) { return {x, PointKind::ideal}; }
  bool is_ideal() const { return kind == PointKind::ideal; }
};

struct GeodesicSimplex {
  std::array<HPoint, 4> vertices{};
  int orientation = 1;
};

/// Ideal-vertex index to horoball parameter h.
using HoroballAssignment = std::map<int, double>;

using Edge = std::pair<int, int>;

/// Edge order used by every per-edge array.
inline constexpr std::array<Edge, 6> kEdges = {
    Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}, Edge{2, 3}};

/// Index into kEdges of the edge {i, j}, in either order.
int edge_index(int i, int j);

/// Index of the edge opposite to kEdges[e].
inline int opposite_edge(int e) { return 5 - e; }

/// Validates the kind invariants (finite inside the ball, ideal on the sphere).
void validate(const HPoint& p);
void validate(const GeodesicSimplex& s);

/// (x1 - x3)(x2 - x4) / ((x1 - x4)(x2 - x3)), infinity handled by limits.
ProjectivePoint cross_ratio(const ProjectivePoint& x1, const ProjectivePoint& x2,
                            const ProjectivePoint& x3, const ProjectivePoint& x4);

/// Chart of the sphere at infinity and its inverse.
ProjectivePoint boundary_coordinate(const Vec3& v);
Vec3 boundary_point(const ProjectivePoint& w);

/// Distance of two finite points; 0 for p = q.
double hyperbolic_distance(const Vec3& p, const Vec3& q);

/// Shape of four ideal points: cross_ratio of their boundary coordinates.
Complex ideal_shape(const std::array<Vec3, 4>& v);

/// Ideal simplex with vertices at boundary coordinates infinity, 0, 1, z.
GeodesicSimplex realize_shape(const Complex& z);

/// Sign of det[v1 - v0, v2 - v0, v3 - v0].
double euclidean_orientation_det(const GeodesicSimplex& s);

/// True when the four vertices are affinely dependent up to `tol`.
bool is_degenerate(const GeodesicSimplex& s, double tol = 1e-12);

/// Interior dihedral angles in kEdges order, each in (0, pi).
std::array<double, 6> dihedral_angles(const GeodesicSimplex& s);

/// Dihedral angles of the spherical simplex spanned by four unit 4-vectors.
std::array<double, 6> spherical_dihedral_angles(const std::array<Vec4, 4>& u);

/// Arc lengths of the spherical simplex edges, kEdges order.
std::array<double, 6> spherical_edge_lengths(const std::array<Vec4, 4>& u);

/// Length of edge {i, j}; ideal endpoints are truncated at their horoballs.
double edge_length(const GeodesicSimplex& s, const Edge& e, const HoroballAssignment& h);

/// Volume of the ideal simplex of shape z, D(z).
double ideal_volume(const Complex& z);

/// Signed volume of an ideal simplex: orientation times D(shape).
double ideal_simplex_volume(const GeodesicSimplex& s);

// Exact projective geometry --------------------------------------------------

using RVec4 = std::array<Rational, 4>;
using RMat4 = std::array<RVec4, 4>;

/// Simplex in real projective 3-space with homogeneous rational vertices.
struct ProjectiveSimplex {
  std::array<RVec4, 4> vertices{};

  friend bool operator==(const ProjectiveSimplex&, const ProjectiveSimplex&) = default;
};

/// Homogeneous simplex (1, x_k) from rational affine points.
ProjectiveSimplex from_affine(const std::array<std::array<Rational, 3>, 4>& points);

/// Scales v so its first nonzero coordinate is 1.
RVec4 normalize(const RVec4& v);

/// Covector of the plane through the three vertices other than `k`.
RVec4 face_covector(const ProjectiveSimplex& s, int k);

Rational determinant(const RMat4& m);
RMat4 inverse(const RMat4& m);

/// Polar dual with respect to the quadric X^T Q X = 0: dual vertex j is the
/// pole of the face opposite vertex j. Vertices are normalized, so applying
/// the map twice returns the input exactly when its vertices are normalized.
/// Throws tangency for a vertex on Q or a face tangent to Q, degenerate for a
/// singular Q or flat simplex.
ProjectiveSimplex polar_dual(const ProjectiveSimplex& s, const RMat4& q);

/// diag(-1, 1, 1, 1): the absolute of the Klein ball.
RMat4 unit_sphere_form();

}  // namespace scg::hypgeom
