#include "scg/json_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace scg::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) malformed(what + " must be a number");
  return j.get<double>();
}

std::int64_t integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed(what + " must be an integer");
  return j.get<std::int64_t>();
}

Vec3 vec3(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) malformed(what + " must be an array of 3 numbers");
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

Vec4 vec4(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 4) malformed(what + " must be an array of 4 numbers");
  return {number(j[0], what), number(j[1], what), number(j[2], what), number(j[3], what)};
}

int orientation(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) return 1;
  std::int64_t o = integer(j.at(key), key);
  if (o != 1 && o != -1) malformed("orientation must be 1 or -1");
  return static_cast<int>(o);
}

const Json& term_list(const Json& j) {
  if (j.is_array()) return j;
  return field(j, "terms");
}

manifold::Word word_from_json(const Json& j) {
  if (!j.is_object()) malformed("word must be an object {generator: exponent}");
  manifold::Word w;
  for (const auto& [k, v] : j.items()) w[k] = integer(v, "word exponent");
  return w;
}

spinor::Matrix rational_matrix(const Json& j, const std::string& what) {
  if (!j.is_array()) malformed(what + " must be a matrix");
  spinor::Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) malformed(what + " must be a matrix");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

hypgeom::RVec4 rvec4(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 4) malformed(what + " must have 4 entries");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

/// Parses a leading real number from s starting at pos; returns false when none.
bool read_real(const std::string& s, std::size_t& pos, double& out) {
  const char* begin = s.c_str() + pos;
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  pos += static_cast<std::size_t>(end - begin);
  return true;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) malformed("empty complex number");
  double re = 0.0;
  double im = 0.0;
  std::size_t pos = 0;
  auto imaginary_unit = [&](std::size_t p, double coeff) {
    if (p < s.size() && (s[p] == 'i' || s[p] == 'j') && p + 1 == s.size()) {
      im = coeff;
      return true;
    }
    return false;
  };
  if (s == "i" || s == "+i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};
  double first = 0.0;
  if (!read_real(s, pos, first)) malformed("cannot parse complex number '" + text + "'");
  if (pos == s.size()) return {first, 0.0};
  if (imaginary_unit(pos, first)) return {0.0, im};
  re = first;
  if (s[pos] != '+' && s[pos] != '-') malformed("cannot parse complex number '" + text + "'");
  double sgn = s[pos] == '-' ? -1.0 : 1.0;
  if (pos + 1 < s.size() && (s[pos + 1] == 'i' || s[pos + 1] == 'j') && pos + 2 == s.size()) return {re, sgn};
  double second = 0.0;
  if (!read_real(s, pos, second) || !imaginary_unit(pos, second)) {
    malformed("cannot parse complex number '" + text + "'");
  }
  return {re, im};
}

Complex complex_from_json(const Json& j) {
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], "real part"), number(j[1], "imaginary part")};
  if (j.is_object() && j.contains("re")) {
    return {number(j.at("re"), "re"), j.contains("im") ? number(j.at("im"), "im") : 0.0};
  }
  malformed("complex number must be a string, number, [re, im] or {re, im}");
}

Json complex_to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    malformed(e.what());
  }
  malformed("rational must be an integer or a string \"p/q\"");
}

Json rational_to_json(const Rational& q) { return to_string(q); }

hypgeom::GeodesicSimplex simplex_from_json(const Json& j) {
  const Json& v = field(j, "vertices");
  if (!v.is_array() || v.size() != 4) malformed("simplex needs 4 vertices");
  hypgeom::GeodesicSimplex s;
  for (int k = 0; k < 4; ++k) {
    s.vertices[k].x = vec3(v[k], "vertex");
    s.vertices[k].kind = hypgeom::PointKind::finite;
  }
  if (j.contains("kinds")) {
    const Json& kinds = j.at("kinds");
    if (!kinds.is_array() || kinds.size() != 4) malformed("kinds needs 4 entries");
    for (int k = 0; k < 4; ++k) {
      std::string kind = kinds[k].is_string() ? kinds[k].get<std::string>() : "";
      if (kind == "ideal") {
        s.vertices[k].kind = hypgeom::PointKind::ideal;
      } else if (kind != "finite") {
        malformed("kind must be \"finite\" or \"ideal\"");
      }
    }
  }
  s.orientation = orientation(j, "orientation");
  try {
    hypgeom::validate(s);
  } catch (const Error& e) {
    malformed(e.what());
  }
  return s;
}

Json simplex_to_json(const hypgeom::GeodesicSimplex& s) {
  Json v = Json::array();
  Json kinds = Json::array();
  for (const auto& p : s.vertices) {
    v.push_back({p.x[0], p.x[1], p.x[2]});
    kinds.push_back(p.is_ideal() ? "ideal" : "finite");
  }
  return Json{{"vertices", v}, {"kinds", kinds}, {"orientation", s.orientation}};
}

scissors::ScissorSum scissor_sum_from_json(const Json& j) {
  scissors::ScissorSum sum;
  for (const auto& t : term_list(j)) {
    scissors::ScissorTerm term;
    term.simplex = simplex_from_json(field(t, "simplex"));
    if (t.contains("coeff")) term.coeff = integer(t.at("coeff"), "coeff");
    if (t.contains("horoballs")) {
      const Json& h = t.at("horoballs");
      if (!h.is_object()) malformed("horoballs must be an object {vertex: h}");
      for (const auto& [k, v] : h.items()) {
        int idx = -1;
        try {
          idx = std::stoi(k);
        } catch (const std::exception&) {
          malformed("horoball key must be a vertex index");
        }
        if (idx < 0 || idx > 3) malformed("horoball key must be 0..3");
        term.horoballs[idx] = number(v, "horoball parameter");
      }
    }
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

scissors::SphericalSum spherical_sum_from_json(const Json& j) {
  scissors::SphericalSum sum;
  for (const auto& t : term_list(j)) {
    scissors::SphericalTerm term;
    const Json& v = field(t, "vertices");
    if (!v.is_array() || v.size() != 4) malformed("spherical simplex needs 4 vertices");
    for (int k = 0; k < 4; ++k) term.vertices[k] = vec4(v[k], "spherical vertex");
    if (t.contains("coeff")) term.coeff = integer(t.at("coeff"), "coeff");
    term.orientation = orientation(t, "orientation");
    sum.terms.push_back(term);
  }
  return sum;
}

scissors::Quantity quantity_from_json(const Json& j) {
  if (j.is_number()) return scissors::Quantity::numeric(j.get<double>());
  if (!j.is_object()) malformed("quantity must be a number or an object");
  scissors::Quantity q;
  if (j.contains("value")) q.value = number(j.at("value"), "value");
  if (j.contains("pi") || j.contains("symbols")) {
    scissors::ExactValue e;
    if (j.contains("pi")) e.pi_multiple = rational_from_json(j.at("pi"));
    if (j.contains("symbols")) {
      if (!j.at("symbols").is_object()) malformed("symbols must be an object");
      for (const auto& [k, v] : j.at("symbols").items()) e.symbols[k] = rational_from_json(v);
    }
    q.exact = e;
  }
  return q;
}

scissors::DehnTensor dehn_tensor_from_json(const Json& j) {
  scissors::DehnTensor t;
  std::string mode = j.value("mode", "numeric");
  if (mode == "exact") {
    t.mode = scissors::Mode::exact;
  } else if (mode != "numeric") {
    malformed("mode must be \"exact\" or \"numeric\"");
  }
  std::string geometry = j.value("geometry", "hyperbolic");
  if (geometry == "spherical") {
    t.geometry = scissors::Geometry::spherical;
  } else if (geometry != "hyperbolic") {
    malformed("geometry must be \"hyperbolic\" or \"spherical\"");
  }
  for (const auto& term : field(j, "terms")) {
    scissors::DehnTerm d;
    if (term.contains("coeff")) d.coeff = rational_from_json(term.at("coeff"));
    d.length = quantity_from_json(field(term, "length"));
    d.angle = quantity_from_json(field(term, "angle"));
    t.terms.push_back(d);
  }
  return t;
}

Json reduced_to_json(const scissors::ReducedTensor& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"length", c.length_key},
                     {"angle", c.angle_key},
                     {"length_value", c.length_value},
                     {"angle_value", c.angle_value},
                     {"coeff", to_string(c.coeff)}});
  }
  Json v{{"is_zero", r.verdict.is_zero},
         {"mode", r.verdict.mode == scissors::Mode::exact ? "exact" : "numeric"},
         {"description", r.verdict.describe()},
         {"warnings", r.verdict.warnings}};
  if (r.verdict.mode == scissors::Mode::numeric) {
    v["digits"] = r.verdict.digits;
    v["tolerance"] = r.verdict.tolerance;
  }
  return Json{{"components", comps}, {"verdict", v}};
}

std::vector<bloch::Generator> generators_from_json(const Json& j) {
  if (!j.is_array()) malformed("generators must be an array");
  std::vector<bloch::Generator> out;
  for (const auto& g : j) {
    bloch::Generator gen;
    const Json& name = field(g, "name");
    if (!name.is_string()) malformed("generator name must be a string");
    gen.name = name.get<std::string>();
    gen.value = {number(field(g, "value_re"), "value_re"), g.contains("value_im") ? number(g.at("value_im"), "value_im") : 0.0};
    gen.order = g.contains("order") ? static_cast<int>(integer(g.at("order"), "order")) : 0;
    out.push_back(gen);
  }
  return out;
}

bloch::PreBlochElement pre_bloch_from_json(const Json& j, const bloch::GroupPtr& group) {
  bloch::PreBlochElement p;
  for (const auto& t : term_list(j)) {
    bloch::PrePoint pt;
    const Json& z = field(t, "z");
    if (z.is_string() && z.get<std::string>().find_first_of("ij") == std::string::npos) {
      pt.exact = rational_from_json(z);
      pt.z = {to_double(*pt.exact), 0.0};
    } else if (z.is_number_integer()) {
      pt.exact = Rational(z.get<std::int64_t>());
      pt.z = {to_double(*pt.exact), 0.0};
    } else {
      pt.z = complex_from_json(z);
    }
    try {
      if (t.contains("z_word")) pt.z_word = bloch::MultiplicativeElement::from_word(group, word_from_json(t.at("z_word")), pt.z);
      if (t.contains("one_minus_z_word")) {
        pt.one_minus_z_word =
            bloch::MultiplicativeElement::from_word(group, word_from_json(t.at("one_minus_z_word")), 1.0 - pt.z);
      }
      p.add(pt, t.contains("coeff") ? integer(t.at("coeff"), "coeff") : 1);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::domain) malformed(e.what());
      throw;
    }
  }
  return p;
}

Json wedge_to_json(const bloch::WedgeElement& w) {
  Json terms = Json::array();
  for (const auto& [key, q] : w.coefficients()) {
    const auto& gens = w.group()->generators();
    terms.push_back({{"left", gens[key.first].name}, {"right", gens[key.second].name}, {"coeff", to_string(q)}});
  }
  return Json{{"is_zero", w.is_zero()}, {"terms", terms}, {"text", w.to_string()}};
}

period::QuadricSimplexPair quadric_pair_from_json(const Json& j) {
  period::QuadricSimplexPair p;
  const Json& q = field(j, "Q");
  if (!q.is_array() || q.size() != 4) malformed("Q must be 4x4");
  for (int i = 0; i < 4; ++i) p.q[i] = rvec4(q[i], "row of Q");
  const Json& planes = field(j, "planes");
  if (!planes.is_array() || planes.size() != 4) malformed("planes needs 4 covectors");
  for (int i = 0; i < 4; ++i) p.planes[i] = rvec4(planes[i], "plane");
  p.ruling = orientation(j, "ruling");
  return p;
}

spinor::SplitSoElement split_so_from_json(const Json& j) {
  spinor::SplitSoElement x;
  x.a = rational_matrix(field(j, "A"), "A");
  x.b = rational_matrix(field(j, "B"), "B");
  x.c = rational_matrix(field(j, "C"), "C");
  x.n = static_cast<int>(x.a.size());
  try {
    x.validate();
  } catch (const Error& e) {
    malformed(e.what());
  }
  return x;
}

Json split_so_to_json(const spinor::SplitSoElement& x) {
  auto mat = [](const spinor::Matrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_string(v));
      out.push_back(r);
    }
    return out;
  };
  return Json{{"A", mat(x.a)}, {"B", mat(x.b)}, {"C", mat(x.c)}};
}

manifold::ShapedTriangulation triangulation_from_json(const Json& j) {
  manifold::ShapedTriangulation t;
  if (!j.is_object()) malformed("triangulation must be an object");
  t.name = j.value("name", "");
  t.description = j.value("description", "");
  t.cusps = j.contains("cusps") ? static_cast<int>(integer(j.at("cusps"), "cusps")) : 1;
  if (j.contains("generators")) t.generators = generators_from_json(j.at("generators"));
  const Json& shapes = field(j, "shapes");
  if (!shapes.is_array()) malformed("shapes must be an array");
  for (const auto& s : shapes) {
    manifold::Shape shape;
    if (s.is_object() && s.contains("z")) {
      shape.z = complex_from_json(s.at("z"));
    } else {
      shape.z = complex_from_json(s);
    }
    if (s.is_object() && s.contains("z_word")) shape.z_word = word_from_json(s.at("z_word"));
    if (s.is_object() && s.contains("one_minus_z_word")) shape.one_minus_z_word = word_from_json(s.at("one_minus_z_word"));
    t.shapes.push_back(shape);
  }
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) malformed("edges must be an array");
    for (const auto& e : edges) {
      if (!e.is_array()) malformed("edge class must be an array of [tet, slot]");
      std::vector<std::pair<int, int>> cls;
      for (const auto& p : e) {
        if (!p.is_array() || p.size() != 2) malformed("edge entry must be [tet, slot]");
        cls.emplace_back(static_cast<int>(integer(p[0], "tet")), static_cast<int>(integer(p[1], "slot")));
      }
      t.edges.push_back(std::move(cls));
    }
  }
  if (j.contains("vertex_cusps")) {
    for (const auto& v : j.at("vertex_cusps")) {
      if (!v.is_array() || v.size() != 4) malformed("vertex_cusps entries need 4 labels");
      t.vertex_cusps.push_back({static_cast<int>(integer(v[0], "cusp")), static_cast<int>(integer(v[1], "cusp")),
                                static_cast<int>(integer(v[2], "cusp")), static_cast<int>(integer(v[3], "cusp"))});
    }
  }
  manifold::validate(t);
  return manifold::resolve_words(t);
}

manifold::ShapedTriangulation parse_triangulation(const std::string& text) { return triangulation_from_json(parse(text)); }

}  // namespace scg::json_io
