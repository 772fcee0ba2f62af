#pragma once

// Classical polylogarithms Li_n on the principal branch (cut along (1, inf)),
// and their single-valued real versions: the Bloch-Wigner dilogarithm D(z),
// the single-valued trilogarithm, and Zagier's Bernoulli-weighted L_n.
//
// Every evaluator is available in working precision (Complex) and in 50-digit
// extended precision (ExtComplex).

#include <array>
#include <limits>

#include "scg/numeric.hpp"

namespace scg::polylog {

template <class C>
struct ComplexTraits;

template <>
struct ComplexTraits<Complex> {
  using Real = double;
};

template <>
struct ComplexTraits<ExtComplex> {
  using Real = ExtReal;
};

template <class C>
using RealOf = typename ComplexTraits<C>::Real;

/// Default series budget: target error at machine epsilon of the precision.
template <class C>
Precision default_precision() {
  if constexpr (std::is_same_v<C, Complex>) {
    return Precision{std::numeric_limits<double>::epsilon(), 2000};
  } else {
    return Precision{1e-48, 20000};
  }
}

/// Li_n(z), n >= 1.
///
/// |z| <= 1/2 uses the defining series; |z| >= 2 the inversion identity;
/// n = 2 near z = 1 the reflection identity; the remaining annulus the
/// expansion in powers of log z with zeta-value coefficients.
/// Throws domain error for (n < 1) or (n = 1, z = 1), precision error when
/// the budget is exhausted.
template <class C>
C li(int n, const C& z, const Precision& prec = default_precision<C>());

/// Riemann zeta at an integer s >= 2.
template <class Real>
Real zeta(int s);

/// Bernoulli number B_k with B_1 = -1/2 (generating function x / (e^x - 1)).
Rational bernoulli(int k);

/// D(z) = Im Li_2(z) + arg(1 - z) log|z|; zero at 0, 1 and infinity.
template <class C>
RealOf<C> bloch_wigner(const C& z, const Precision& prec = default_precision<C>());

double bloch_wigner(const ProjectivePoint& p);

/// Re(Li_3(z) - log|z| Li_2(z) + (1/3) log^2|z| Li_1(z)); 0 at z = 0, zeta(3) at z = 1.
template <class C>
RealOf<C> sv_l3(const C& z, const Precision& prec = default_precision<C>());

/// Zagier's single-valued polylogarithm,
///   R_n( sum_{k=0}^{n-1} B_k 2^k / k! * Li_{n-k}(z) log^k|z| ),
/// R_n = Re for odd n, Im for even n. Reproduces bloch_wigner at n = 2 and
/// sv_l3 at n = 3.
template <class C>
RealOf<C> sv_ln(int n, const C& z, const Precision& prec = default_precision<C>());

/// Lobachevsky function, defined as D(e^{2 i theta}) / 2.
double lobachevsky(double theta);

/// |sum_i (-1)^i D(cross ratio of the four points other than p_i)|.
/// Throws degenerate error when two points coincide.
double five_term_defect(const std::array<ProjectivePoint, 5>& points);

}  // namespace scg::polylog
