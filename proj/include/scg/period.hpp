#pragma once

// Volumes by integration in the Klein model, the quadric period form, and
// the Schlafli differential check.
//
// For a quadric Q~ of signature (3,1) and a real simplex in its ball
// component, the chart x_0 = 1 turns the canonical form into
//   omega_Q = (2 pi i)^-2 * sqrt(det Q~) * (-d^3x) / Q~(1, x)^2.
// det Q~ < 0 here, so the literal square root makes omega_Q purely
// imaginary. The real branch takes sqrt(det Q~) := ruling * sqrt|det Q~|,
// which gives omega_Q = ruling * sqrt|det Q~| / (4 pi^2 Q~(1, x)^2) d^3x and
// a period equal to ruling / (4 pi^2) times the hyperbolic volume.
//
// Schlafli: along a smooth family of compact simplices,
//   dV = -1/2 sum_e l_e d(theta_e).
// The d log r of the cross-ratio of two intersecting face planes and the two
// isotropic planes through their edge equals 2i d(theta), which is the bridge
// to the complex form of the differential.

#include <complex>
#include <functional>

#include "scg/hypgeom.hpp"
#include "scg/quadrature.hpp"

namespace scg::period {

/// (1 - |x|^2)^-2; domain error for |x| >= 1.
double klein_density(const Vec3& x);

/// Signed hyperbolic volume by adaptive cubature: orientation * sign(det) *
/// integral of klein_density. Ideal vertices are treated as singular corners.
/// Degenerate simplices give 0.
quadrature::Report klein_volume(const hypgeom::GeodesicSimplex& s, double tol = 1e-6,
                                const quadrature::Options& base = {});

/// Unsigned volume of a compact simplex by a fixed conical Gauss rule.
double compact_volume(const hypgeom::GeodesicSimplex& s, int points = 30);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact inertia of a symmetric rational matrix (characteristic polynomial
/// and Descartes' rule of signs).
Inertia inertia(const hypgeom::RMat4& q);

struct QuadricSimplexPair {
  hypgeom::RMat4 q{};
  std::array<hypgeom::RVec4, 4> planes{};
  int ruling = 1;
};

enum class SqrtBranch { real, literal };

/// Vertices of the simplex cut out by the planes, in the chart x_0 = 1.
/// Also checks the quadric (nondegenerate, signature (3,1), definite chart
/// block) and that every vertex lies in the closed ball component.
/// `on_quadric[k]` is set for vertices on Q.
std::array<Vec3, 4> pair_vertices(const QuadricSimplexPair& p, std::array<bool, 4>* on_quadric = nullptr);

/// Integrand of omega_Q at x in the chart x_0 = 1. Throws tangency on Q.
std::complex<double> omega_q(const QuadricSimplexPair& p, const Vec3& x, SqrtBranch branch = SqrtBranch::real);

struct PeriodReport {
  std::complex<double> value;
  double error = 0.0;
  std::int64_t evaluations = 0;
  quadrature::Method method = quadrature::Method::quadrature;
};

/// Integral of omega_Q over the real simplex. Throws non_real when the
/// imaginary part exceeds tol * |value|.
PeriodReport period_integral(const QuadricSimplexPair& p, double tol = 1e-6, SqrtBranch branch = SqrtBranch::real,
                             const quadrature::Options& base = {});

/// Period / volume for the real branch: ruling / (4 pi^2).
double period_constant(int ruling);

/// Family of compact simplices, evaluated in extended precision so that
/// finite differences are limited by truncation rather than rounding.
using SimplexPath = std::function<quadrature::ExtTetrahedron(const ExtReal&)>;

/// Vertex k moves as x_k + t d.
SimplexPath moving_vertex_path(const hypgeom::GeodesicSimplex& s, int k, const Vec3& d);
/// Scaling by 1 + t about the vertex centroid.
SimplexPath dilation_path(const hypgeom::GeodesicSimplex& s);

/// Extended-precision volume (30-point conical Gauss rule), interior dihedral
/// angles and edge lengths of a compact simplex, kEdges order.
ExtReal compact_volume(const quadrature::ExtTetrahedron& t);
std::array<ExtReal, 6> dihedral_angles(const quadrature::ExtTetrahedron& t);
std::array<ExtReal, 6> edge_lengths(const quadrature::ExtTetrahedron& t);

struct SchlafliReport {
  double defect = 0.0;         // |dV/dt + 1/2 sum l_e dtheta_e/dt|
  double dvolume = 0.0;        // dV/dt
  double schlafli_sum = 0.0;   // -1/2 sum l_e dtheta_e/dt
  double relative = 0.0;       // defect / |dV/dt| (defect itself if dV/dt = 0)
};

/// Central differences of volume and angles at t0 with the given step; the
/// lengths are taken at t0.
SchlafliReport schlafli_defect(const SimplexPath& path, double t0, double step);

}  // namespace scg::period
