#pragma once

// Test-only reference values, computed by routes independent of the library.

#include <array>
#include <optional>

#include "scg/numeric.hpp"

namespace oracle {

using scg::ExtComplex;
using scg::ExtReal;
using scg::Rational;

/// Im Li_2(e^{2 pi i p / q}) = Cl_2(2 pi p / q) from trigamma values:
///   q^-2 sum_{k=1}^{q} sin(2 pi p k / q) psi'(k / q).
ExtReal clausen2_rational(int p, int q);

/// Catalan's constant from the library of mathematical constants.
ExtReal catalan();

/// Direct series sum_{k>=1} z^k / k^n with a geometric tail bound; |z| <= 0.9.
ExtComplex li_series(int n, const ExtComplex& z);

/// D(z) by the direct series applied to whichever of the six images of z
/// under the anharmonic group is smallest, when that modulus is <= 0.9.
std::optional<ExtReal> bloch_wigner_series(const ExtComplex& z);

/// Bernoulli numbers (B_1 = -1/2) by the Akiyama-Tanigawa algorithm.
Rational bernoulli_akiyama_tanigawa(int k);

/// Lobachevsky function -int_0^theta log|2 sin t| dt by tanh-sinh quadrature.
double lobachevsky_quadrature(double theta);

/// Classical polar of a simplex containing the origin: the dual vertex of
/// face k is the vector n with n . p = 1 on the three points of that face.
std::array<std::array<Rational, 3>, 4> classical_polar(const std::array<std::array<Rational, 3>, 4>& points);

}  // namespace oracle
