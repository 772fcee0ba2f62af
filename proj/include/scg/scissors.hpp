#pragma once

// Formal scissor-congruence sums of 3-simplices and their Dehn invariants in
// R (x) R/piZ (x) Q.
//
// A term {simplex, orientation} contributes with sign
// coeff * orientation * sign(det[v1 - v0, v2 - v0, v3 - v0]), so permuting
// vertices and flipping the orientation act as in the defining relations,
// and a mirror image with mirrored orientation is the same element.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scg/hypgeom.hpp"
#include "scg/pslq.hpp"

namespace scg::scissors {

enum class Geometry { hyperbolic, spherical };

struct ScissorTerm {
  hypgeom::GeodesicSimplex simplex;
  std::int64_t coeff = 1;
  hypgeom::HoroballAssignment horoballs;
};

struct ScissorSum {
  std::vector<ScissorTerm> terms;
};

struct SphericalTerm {
  std::array<Vec4, 4> vertices{};
  std::int64_t coeff = 1;
  int orientation = 1;
};

struct SphericalSum {
  std::vector<SphericalTerm> terms;
};

/// Drops degenerate simplices, sorts vertices (sign folded into the
/// coefficient, horoball keys permuted along), folds orientation into the
/// coefficient and merges equal terms.
ScissorSum normalize(const ScissorSum& s);

/// Exact real number pi_multiple * pi + sum q_s * s over formal symbols,
/// the symbols understood as Q-linearly independent together with pi.
struct ExactValue {
  Rational pi_multiple = 0;
  std::map<std::string, Rational> symbols;

  static ExactValue pi_times(const Rational& q);
  static ExactValue symbol(const std::string& name, const Rational& q = 1);

  ExactValue operator+(const ExactValue& o) const;
  ExactValue operator-(const ExactValue& o) const;
  ExactValue operator*(const Rational& q) const;
  bool is_rational_pi() const { return symbols.empty(); }
};

/// A real quantity given numerically, exactly, or both.
struct Quantity {
  double value = 0.0;
  std::optional<ExactValue> exact;

  static Quantity numeric(double v) { return {v, std::nullopt}; }
  static Quantity formal(const ExactValue& e, double v = 0.0) { return {v, e}; }
};

enum class Mode { exact, numeric };

struct DehnTerm {
  Rational coeff = 1;
  Quantity length;
  Quantity angle;
};

struct DehnTensor {
  Mode mode = Mode::numeric;
  Geometry geometry = Geometry::hyperbolic;
  std::vector<DehnTerm> terms;

  /// this + q * other; modes and geometries must agree.
  DehnTensor plus(const DehnTensor& other, const Rational& q = 1) const;
};

/// Sum over terms and edges of signed coeff * (length (x) dihedral angle).
/// Ideal edges use horoball-truncated lengths.
DehnTensor dehn3(const ScissorSum& s);

/// Spherical analogue with arc lengths of edges.
DehnTensor spherical_dehn3(const SphericalSum& s);

/// One coordinate of the rationalized tensor: coeff * (length_key (x) angle_key).
struct Component {
  std::string length_key;
  std::string angle_key;
  double length_value = 0.0;
  double angle_value = 0.0;
  Rational coeff;
};

struct Verdict {
  bool is_zero = false;
  Mode mode = Mode::numeric;
  int digits = 0;            // working digits of the relation search (numeric mode)
  double tolerance = 0.0;    // relation tolerance (numeric mode)
  std::vector<std::string> warnings;

  std::string describe() const;
};

struct ReducedTensor {
  std::vector<Component> components;
  Verdict verdict;
};

/// Exact mode: drops angles that are rational multiples of pi, expands the
/// rest bilinearly over formal symbols (throws not_exact for an inexact
/// length against a non-torsion angle). Numeric mode: merges equal angles
/// and equal lengths, then finds Q-bases of angles (modulo pi) and lengths
/// by integer relation search and returns the rational coordinate tensor.
ReducedTensor reduce(const DehnTensor& t, const pslq::Options& opt = {});

/// Angle reduced into [0, pi).
double angle_mod_pi(double theta);

}  // namespace scg::scissors
