#include "scg/manifold.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "scg/hypgeom.hpp"
#include "scg/json_io.hpp"
#include "scg/period.hpp"
#include "scg/polylog.hpp"

namespace scg::manifold {

namespace detail {
const std::map<std::string, std::string>& census_sources();
}

namespace {

constexpr double kTwoPi = boost::math::constants::two_pi<double>();

/// Representative of q modulo 2 in (-1, 1].
Rational mod_two(Rational q) {
  while (q > 1) q -= 2;
  while (q <= -1) q += 2;
  return q;
}

bloch::MultiplicativeElement word_element(const bloch::GroupPtr& g, const Word& w) {
  return bloch::MultiplicativeElement::from_word(g, w);
}

/// Exact arg / pi of the slot parameter, in (0, 1).
Rational exact_slot_angle(const Shape& s, int slot, const bloch::GroupPtr& g, int tet) {
  if (!s.z_word || !s.one_minus_z_word) {
    throw Error(ErrorKind::not_exact, "tetrahedron " + std::to_string(tet) + " has no shape words");
  }
  auto z = word_element(g, *s.z_word);
  auto w = word_element(g, *s.one_minus_z_word);
  std::optional<Rational> a;
  Rational shift = 0;
  switch (slot) {
    case 0: a = z.arg_over_pi(); break;
    case 1: a = w.inverse().arg_over_pi(); break;
    default:
      a = (w * z.inverse()).arg_over_pi();
      shift = 1;
      break;
  }
  if (!a) throw Error(ErrorKind::not_exact, "argument of a shape of tetrahedron " + std::to_string(tet) + " is not exact");
  Rational r = mod_two(*a + shift);
  if (r <= 0 || r >= 1) {
    throw Error(ErrorKind::domain, "shape words of tetrahedron " + std::to_string(tet) + " give an angle outside (0, pi)");
  }
  return r;
}

int cusp_of(const ShapedTriangulation& t, int tet, int vertex) {
  return t.vertex_cusps.empty() ? 0 : t.vertex_cusps[tet][vertex];
}

}  // namespace

void validate(const ShapedTriangulation& t) {
  const int n = static_cast<int>(t.shapes.size());
  if (t.cusps < 0) throw Error(ErrorKind::malformed_input, "cusp count must be nonnegative");
  for (int k = 0; k < n; ++k) {
    if (!(t.shapes[k].z.imag() > 0.0)) {
      throw Error(ErrorKind::domain, "shape of tetrahedron " + std::to_string(k) + " must have positive imaginary part");
    }
  }
  if (!t.edges.empty()) {
    std::vector<std::array<int, 3>> used(n, std::array<int, 3>{0, 0, 0});
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      if (t.edges[e].empty()) throw Error(ErrorKind::malformed_input, "edge class " + std::to_string(e) + " is empty");
      for (auto [tet, slot] : t.edges[e]) {
        if (tet < 0 || tet >= n || slot < 0 || slot > 2) {
          throw Error(ErrorKind::malformed_input, "edge class " + std::to_string(e) + " has an invalid (tetrahedron, slot)");
        }
        ++used[tet][slot];
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int s = 0; s < 3; ++s) {
        if (used[k][s] != 2) {
          throw Error(ErrorKind::malformed_input, "slot " + std::to_string(s) + " of tetrahedron " + std::to_string(k) +
                                                      " appears " + std::to_string(used[k][s]) + " times, expected 2");
        }
      }
    }
  }
  if (!t.vertex_cusps.empty()) {
    if (static_cast<int>(t.vertex_cusps.size()) != n) {
      throw Error(ErrorKind::malformed_input, "vertex_cusps needs one entry per tetrahedron");
    }
    for (const auto& v : t.vertex_cusps) {
      for (int c : v) {
        if (c < 0 || c >= std::max(t.cusps, 1)) throw Error(ErrorKind::malformed_input, "cusp label out of range");
      }
    }
  }
}

Complex slot_value(const Complex& z, int slot) {
  switch (slot) {
    case 0: return z;
    case 1: return 1.0 / (1.0 - z);
    case 2: return (z - 1.0) / z;
    default: throw Error(ErrorKind::malformed_input, "slot must be 0, 1 or 2");
  }
}

bloch::GroupPtr group_of(const ShapedTriangulation& t) { return bloch::GeneratorGroup::make(t.generators); }

ShapedTriangulation resolve_words(const ShapedTriangulation& t) {
  ShapedTriangulation out = t;
  bool any = false;
  for (const auto& s : t.shapes) any = any || s.z_word || s.one_minus_z_word;
  if (!any) return out;
  bloch::GroupPtr g = group_of(t);
  for (auto& s : out.shapes) {
    if (s.z_word) s.z = bloch::MultiplicativeElement::from_word(g, *s.z_word, s.z).value();
    if (s.one_minus_z_word) bloch::MultiplicativeElement::from_word(g, *s.one_minus_z_word, 1.0 - s.z);
  }
  return out;
}

std::vector<EdgeDefect> gluing_defect(const ShapedTriangulation& t) {
  validate(t);
  std::vector<EdgeDefect> out;
  for (const auto& edge : t.edges) {
    Complex prod = 1.0;
    double angle = 0.0;
    for (auto [tet, slot] : edge) {
      Complex w = slot_value(t.shapes[tet].z, slot);
      prod *= w;
      angle += std::arg(w);
    }
    out.push_back({std::abs(prod - 1.0), std::abs(angle - kTwoPi)});
  }
  return out;
}

double max_gluing_defect(const ShapedTriangulation& t) {
  double m = 0.0;
  for (const auto& d : gluing_defect(t)) m = std::max({m, d.product, d.angle});
  return m;
}

std::vector<Rational> exact_angle_sums(const ShapedTriangulation& t) {
  validate(t);
  bloch::GroupPtr g = group_of(t);
  std::vector<Rational> out;
  for (const auto& edge : t.edges) {
    Rational sum = 0;
    for (auto [tet, slot] : edge) sum += exact_slot_angle(t.shapes[tet], slot, g, tet);
    out.push_back(sum);
  }
  return out;
}

double volume(const ShapedTriangulation& t, double tolerance, bool override_gluing) {
  double defect = max_gluing_defect(t);
  if (defect > tolerance && !override_gluing) {
    throw Error(ErrorKind::domain, "gluing defect " + std::to_string(defect) + " exceeds tolerance");
  }
  double v = 0.0;
  for (const auto& s : t.shapes) v += polylog::bloch_wigner(s.z);
  return v;
}

quadrature::Report klein_volume_sum(const ShapedTriangulation& t, double tol) {
  validate(t);
  quadrature::Report total;
  for (const auto& s : t.shapes) {
    quadrature::Report r = period::klein_volume(hypgeom::realize_shape(s.z), tol);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    if (r.method == quadrature::Method::monte_carlo) total.method = r.method;
  }
  return total;
}

BlochReport bloch_element(const ShapedTriangulation& t, bloch::GroupPtr group) {
  validate(t);
  if (!group) group = group_of(t);
  BlochReport r;
  for (std::size_t k = 0; k < t.shapes.size(); ++k) {
    const Shape& s = t.shapes[k];
    bloch::PrePoint p;
    p.z = s.z;
    if (s.z_word) p.z_word = bloch::MultiplicativeElement::from_word(group, *s.z_word, s.z);
    if (s.one_minus_z_word) p.one_minus_z_word = bloch::MultiplicativeElement::from_word(group, *s.one_minus_z_word, 1.0 - s.z);
    r.element.add(p, 1);
  }
  r.delta = bloch::delta2(r.element, group);
  return r;
}

DehnReport dehn_check(const ShapedTriangulation& t, scissors::Mode mode, const std::vector<double>& cusp_horoballs,
                      const pslq::Options& opt) {
  validate(t);
  const int cusps = std::max(t.cusps, 1);
  std::vector<double> h = cusp_horoballs.empty() ? std::vector<double>(cusps, 1.0) : cusp_horoballs;
  if (static_cast<int>(h.size()) != cusps) {
    throw Error(ErrorKind::domain, "horoball policy needs one parameter per cusp");
  }
  for (double v : h) {
    if (!(v > 0.0)) throw Error(ErrorKind::domain, "horoball parameters must be positive");
  }
  bloch::GroupPtr g = mode == scissors::Mode::exact ? group_of(t) : nullptr;
  DehnReport out;
  out.tensor.mode = mode;
  out.tensor.geometry = scissors::Geometry::hyperbolic;
  for (std::size_t k = 0; k < t.shapes.size(); ++k) {
    const int tet = static_cast<int>(k);
    scissors::ScissorTerm term;
    term.simplex = hypgeom::realize_shape(t.shapes[k].z);
    for (int v = 0; v < 4; ++v) term.horoballs[v] = h[cusp_of(t, tet, v)];
    if (mode == scissors::Mode::numeric) {
      scissors::DehnTensor one = scissors::dehn3({{term}});
      out.tensor.terms.insert(out.tensor.terms.end(), one.terms.begin(), one.terms.end());
      continue;
    }
    auto angles = hypgeom::dihedral_angles(term.simplex);
    for (int e = 0; e < 6; ++e) {
      int slot = std::min(e, 5 - e);
      Rational q = exact_slot_angle(t.shapes[k], slot, g, tet);
      double len = hypgeom::edge_length(term.simplex, hypgeom::kEdges[e], term.horoballs);
      out.tensor.terms.push_back(
          {Rational(1), scissors::Quantity::numeric(len),
           scissors::Quantity::formal(scissors::ExactValue::pi_times(q), scissors::angle_mod_pi(angles[e]))});
    }
  }
  out.reduced = scissors::reduce(out.tensor, opt);
  return out;
}

std::vector<std::string> census_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::census_sources()) names.push_back(name);
  return names;
}

ShapedTriangulation load_census(const std::string& name) {
  const auto& sources = detail::census_sources();
  auto it = sources.find(name);
  if (it == sources.end()) throw Error(ErrorKind::domain, "unknown census manifold '" + name + "'");
  return json_io::parse_triangulation(it->second);
}

}  // namespace scg::manifold
