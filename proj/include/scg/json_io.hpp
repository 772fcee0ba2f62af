#pragma once

// JSON schemas for every module. Parse errors are reported as
// malformed_input. Exact rationals are written as strings ("p/q") and read
// from strings or integers; non-integer JSON numbers are read as the exact
// dyadic value of the double.

#include <string>

#include "json.hpp"

#include "scg/bloch.hpp"
#include "scg/hypgeom.hpp"
#include "scg/manifold.hpp"
#include "scg/period.hpp"
#include "scg/scissors.hpp"
#include "scg/spinor.hpp"

namespace scg::json_io {

using Json = nlohmann::json;

Json parse(const std::string& text);
Json read_file(const std::string& path);

/// "a", "bi", "a+bi", "a-bi", "i", "-i"; whitespace ignored.
Complex parse_complex(const std::string& text);
/// String (as above), number, [re, im] or {"re", "im"}.
Complex complex_from_json(const Json& j);
Json complex_to_json(const Complex& z);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

/// { "vertices": [[x, y, z] x4], "kinds": ["finite" | "ideal" x4], "orientation": 1 | -1 }
hypgeom::GeodesicSimplex simplex_from_json(const Json& j);
Json simplex_to_json(const hypgeom::GeodesicSimplex& s);

/// [{ "simplex", "coeff", "horoballs": {"k": h} }] or { "terms": [...] }.
scissors::ScissorSum scissor_sum_from_json(const Json& j);
/// [{ "vertices": [[x0, x1, x2, x3] x4], "coeff", "orientation" }] or { "terms": [...] }.
scissors::SphericalSum spherical_sum_from_json(const Json& j);

/// { "value": x, "pi": "p/q", "symbols": {"name": "p/q"} }, or a number.
scissors::Quantity quantity_from_json(const Json& j);
/// { "mode": "exact" | "numeric", "geometry": ..., "terms": [{ "coeff", "length", "angle" }] }
scissors::DehnTensor dehn_tensor_from_json(const Json& j);
Json reduced_to_json(const scissors::ReducedTensor& r);

/// [{ "name", "value_re", "value_im", "order" }]
std::vector<bloch::Generator> generators_from_json(const Json& j);
/// [{ "z", "coeff", "z_word", "one_minus_z_word" }]; z given as a string
/// without "i" is taken as an exact rational.
bloch::PreBlochElement pre_bloch_from_json(const Json& j, const bloch::GroupPtr& group);
Json wedge_to_json(const bloch::WedgeElement& w);

/// { "Q": 4x4 rationals, "planes": 4 covectors, "ruling": 1 | -1 }
period::QuadricSimplexPair quadric_pair_from_json(const Json& j);

/// { "A": n x n, "B": n x n, "C": n x n } rationals.
spinor::SplitSoElement split_so_from_json(const Json& j);
Json split_so_to_json(const spinor::SplitSoElement& x);

/// { "name", "cusps", "generators", "shapes": [...], "edges": [[[tet, slot], ...], ...], "vertex_cusps" }.
/// A shape is a complex (any form above) or an object with "z" or "re"/"im"
/// plus optional "z_word" and "one_minus_z_word".
manifold::ShapedTriangulation triangulation_from_json(const Json& j);
manifold::ShapedTriangulation parse_triangulation(const std::string& text);

}  // namespace scg::json_io
