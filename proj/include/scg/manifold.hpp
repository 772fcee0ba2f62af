#pragma once

// Shaped ideal triangulations: gluing consistency, volume as a sum of
// Bloch-Wigner values, the Bloch condition, and the extended Dehn invariant.
//
// Edge slots of a tetrahedron with shape z: 0 is the pair {01, 23} with
// parameter z, 1 is {02, 13} with 1/(1-z), 2 is {03, 12} with (z-1)/z.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scg/bloch.hpp"
#include "scg/quadrature.hpp"
#include "scg/scissors.hpp"

namespace scg::manifold {

using Word = std::map<std::string, std::int64_t>;

struct Shape {
  Complex z;
  std::optional<Word> z_word;
  std::optional<Word> one_minus_z_word;
};

struct ShapedTriangulation {
  std::string name;
  std::string description;
  int cusps = 1;
  std::vector<bloch::Generator> generators;
  std::vector<Shape> shapes;
  std::vector<std::vector<std::pair<int, int>>> edges;  // (tetrahedron, slot)
  std::vector<std::array<int, 4>> vertex_cusps;         // empty: every vertex in cusp 0
};

/// Throws malformed_input for bad indices, slots or cusp labels, or when some
/// slot is not used exactly twice (checked only when edges are given);
/// domain for Im z <= 0.
void validate(const ShapedTriangulation& t);

/// Shape parameter of slot 0, 1 or 2.
Complex slot_value(const Complex& z, int slot);

/// Generator group declared by the triangulation.
bloch::GroupPtr group_of(const ShapedTriangulation& t);

/// Shapes with words resolved: z is replaced by the value of its word, which
/// must agree with the given float to 1e-10.
ShapedTriangulation resolve_words(const ShapedTriangulation& t);

struct EdgeDefect {
  double product = 0.0;  // |prod slot shapes - 1|
  double angle = 0.0;    // |sum arg slot shapes - 2 pi|
};

std::vector<EdgeDefect> gluing_defect(const ShapedTriangulation& t);
double max_gluing_defect(const ShapedTriangulation& t);

/// Angle sums around edge classes as exact multiples of pi; needs words.
std::vector<Rational> exact_angle_sums(const ShapedTriangulation& t);

/// sum D(z_i). Throws domain when the gluing defect exceeds `tolerance`
/// unless `override_gluing` is set.
double volume(const ShapedTriangulation& t, double tolerance = 1e-9, bool override_gluing = false);

/// Sum of Klein-model volumes of the realized ideal tetrahedra.
quadrature::Report klein_volume_sum(const ShapedTriangulation& t, double tol = 1e-5);

struct BlochReport {
  bloch::PreBlochElement element;
  bloch::WedgeElement delta;
};

/// sum {z_i} with its delta2 image over the given group (the triangulation's
/// own generators when null).
BlochReport bloch_element(const ShapedTriangulation& t, bloch::GroupPtr group = nullptr);

struct DehnReport {
  scissors::DehnTensor tensor;
  scissors::ReducedTensor reduced;
};

/// Realizes every tetrahedron, puts horoball h_c at each vertex of cusp c
/// (1 for every cusp when `cusp_horoballs` is empty), and reduces the summed
/// Dehn tensor. Exact mode takes angles from the shape words. Throws domain
/// for a horoball list of the wrong size or a nonpositive parameter.
DehnReport dehn_check(const ShapedTriangulation& t, scissors::Mode mode,
                      const std::vector<double>& cusp_horoballs = {}, const pslq::Options& opt = {});

/// Names of the embedded census fixtures.
std::vector<std::string> census_names();
/// Embedded fixture by name; throws domain for an unknown name.
ShapedTriangulation load_census(const std::string& name);

}  // namespace scg::manifold
