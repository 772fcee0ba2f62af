#pragma once

// Cubature over tetrahedra for integrands with integrable vertex
// singularities.
//
// The adaptive driver pairs Grundmann-Moller rules of degree 7 and 5 and
// refines the cell with the largest error estimate. Cells touching a singular
// vertex are refined by cutting off the corner at the edge midpoints, other
// cells are bisected along their longest edge. When the evaluation budget
// runs out, stratified Monte Carlo over the final cells is tried.

#include <array>
#include <cstdint>
#include <functional>

#include "scg/numeric.hpp"

namespace scg::quadrature {

using Integrand = std::function<double(const Vec3&)>;
using Tetrahedron = std::array<Vec3, 4>;

enum class Method { quadrature, monte_carlo };

struct Report {
  double value = 0.0;
  double error = 0.0;
  std::int64_t evaluations = 0;
  Method method = Method::quadrature;
};

struct Options {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  std::int64_t max_evaluations = 4'000'000;
  std::int64_t monte_carlo_samples = 2'000'000;
  std::uint64_t seed = 20240611;
  bool force_monte_carlo = false;
  double min_corner_size = 1e-10;
};

/// Integral of f over the tetrahedron (unsigned measure). `singular[k]` marks
/// vertices where f may blow up; f is never evaluated there. Throws
/// convergence error when neither route reaches the tolerance.
Report integrate(const Integrand& f, const Tetrahedron& t, const std::array<bool, 4>& singular,
                 const Options& opt = {});

/// Fixed conical-product Gauss rule with `points` nodes per direction
/// (7, 10, 15, 20, 25 or 30). A smooth function of the vertices, intended for
/// finite differences of integrals over compact simplices.
double conical_gauss(const Integrand& f, const Tetrahedron& t, int points = 30);

using ExtIntegrand = std::function<ExtReal(const ExtVec3&)>;
using ExtTetrahedron = std::array<ExtVec3, 4>;

/// Same rule in extended precision.
ExtReal conical_gauss(const ExtIntegrand& f, const ExtTetrahedron& t, int points = 30);

/// |det[v1 - v0, v2 - v0, v3 - v0]| / 6.
double euclidean_volume(const Tetrahedron& t);

/// Sum of Grundmann-Moller weights of index s on the unit simplex (1/6).
double grundmann_moller_weight_sum(int s);

}  // namespace scg::quadrature
