#include "scg/cli.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "scg/bloch.hpp"
#include "scg/hypgeom.hpp"
#include "scg/json_io.hpp"
#include "scg/manifold.hpp"
#include "scg/period.hpp"
#include "scg/polylog.hpp"
#include "scg/scissors.hpp"
#include "scg/spinor.hpp"

namespace scg::cli {

namespace {

using json_io::Json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json values = Json::object();
  Json verdicts = Json::object();
  Json precision = Json::object();
  std::vector<std::string> summary;

  void verdict(const std::string& name, bool pass, const std::string& detail) {
    verdicts[name] = Json{{"pass", pass}, {"detail", detail}};
  }

  bool passed() const {
    for (const auto& [k, v] : verdicts.items()) {
      if (!v.at("pass").get<bool>()) return false;
    }
    return true;
  }

  Json to_json() const {
    return Json{{"command", command}, {"inputs", inputs}, {"values", values}, {"verdicts", verdicts}, {"precision", precision}};
  }
};

std::string fmt(double x, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

bool all_ideal(const hypgeom::GeodesicSimplex& s) {
  for (const auto& v : s.vertices) {
    if (!v.is_ideal()) return false;
  }
  return true;
}

Vec3 parse_vec3(const std::string& text) {
  std::stringstream ss(text);
  Vec3 v{};
  char sep = 0;
  if (!(ss >> v[0] >> sep >> v[1] >> sep >> v[2])) {
    throw Error(ErrorKind::malformed_input, "expected three comma-separated numbers, got '" + text + "'");
  }
  return v;
}

// polylog ---------------------------------------------------------------------

struct PolylogArgs {
  std::string fn = "bloch-wigner";
  std::string z = "0";
  int n = 2;
  double theta = 0.0;
  std::string precision = "double";
};

Report polylog_cmd(const PolylogArgs& a) {
  Report r;
  r.command = "polylog";
  r.inputs = {{"fn", a.fn}, {"z", a.z}, {"n", a.n}, {"theta", a.theta}};
  bool ext = a.precision == "extended";
  if (!ext && a.precision != "double") throw Error(ErrorKind::malformed_input, "precision must be double or extended");
  r.precision = {{"arithmetic", ext ? "extended (50 digits, inputs rounded to double)" : "double"},
                 {"target_rel_error", ext ? extended_precision().target_rel_error : polylog::default_precision<Complex>().target_rel_error}};
  Complex z = json_io::parse_complex(a.z);
  ExtComplex ze(ExtReal(z.real()), ExtReal(z.imag()));
  auto put_real = [&](double d, const ExtReal& e) {
    r.values["value"] = d;
    if (ext) r.values["value_extended"] = e.str(45);
    r.summary.push_back(a.fn + " = " + fmt(d, 17));
  };
  if (a.fn == "li") {
    if (ext) {
      ExtComplex v = polylog::li(a.n, ze, extended_precision());
      r.values["value"] = json_io::complex_to_json({static_cast<double>(v.real()), static_cast<double>(v.imag())});
      r.values["value_extended"] = {{"re", v.real().str(45)}, {"im", v.imag().str(45)}};
      r.summary.push_back("Li_" + std::to_string(a.n) + " = " + fmt(static_cast<double>(v.real()), 17) + " + " +
                          fmt(static_cast<double>(v.imag()), 17) + "i");
    } else {
      Complex v = polylog::li(a.n, z);
      r.values["value"] = json_io::complex_to_json(v);
      r.summary.push_back("Li_" + std::to_string(a.n) + " = " + fmt(v.real(), 17) + " + " + fmt(v.imag(), 17) + "i");
    }
  } else if (a.fn == "bloch-wigner") {
    ExtReal e = ext ? polylog::bloch_wigner(ze, extended_precision()) : ExtReal(0);
    put_real(ext ? static_cast<double>(e) : polylog::bloch_wigner(z), e);
  } else if (a.fn == "sv-l3") {
    ExtReal e = ext ? polylog::sv_l3(ze, extended_precision()) : ExtReal(0);
    put_real(ext ? static_cast<double>(e) : polylog::sv_l3(z), e);
  } else if (a.fn == "sv-ln") {
    ExtReal e = ext ? polylog::sv_ln(a.n, ze, extended_precision()) : ExtReal(0);
    put_real(ext ? static_cast<double>(e) : polylog::sv_ln(a.n, z), e);
  } else if (a.fn == "lobachevsky") {
    put_real(polylog::lobachevsky(a.theta), ExtReal(0));
  } else if (a.fn == "zeta") {
    ExtReal e = ext ? polylog::zeta<ExtReal>(a.n) : ExtReal(0);
    put_real(ext ? static_cast<double>(e) : polylog::zeta<double>(a.n), e);
  } else {
    throw Error(ErrorKind::malformed_input, "unknown function '" + a.fn + "'");
  }
  const Json& v = r.values["value"];
  bool finite = v.is_number() ? std::isfinite(v.get<double>())
                              : std::isfinite(v.at("re").get<double>()) && std::isfinite(v.at("im").get<double>());
  r.verdict("finite", finite, "value is finite");
  return r;
}

// simplex-volume --------------------------------------------------------------

struct VolumeArgs {
  std::string input;
  double tol = 1e-6;
  std::int64_t max_evaluations = quadrature::Options{}.max_evaluations;
  std::uint64_t seed = quadrature::Options{}.seed;
  bool force_monte_carlo = false;
};

Report simplex_volume_cmd(const VolumeArgs& a) {
  Report r;
  r.command = "simplex-volume";
  hypgeom::GeodesicSimplex s = json_io::simplex_from_json(json_io::read_file(a.input));
  r.inputs = {{"input", a.input}, {"simplex", json_io::simplex_to_json(s)}};
  r.precision = {{"arithmetic", "double"}, {"rel_tol", a.tol}, {"max_evaluations", a.max_evaluations}, {"seed", a.seed}};
  quadrature::Options opt;
  opt.max_evaluations = a.max_evaluations;
  opt.seed = a.seed;
  opt.force_monte_carlo = a.force_monte_carlo;
  quadrature::Report q = period::klein_volume(s, a.tol, opt);
  r.values["klein_volume"] = q.value;
  r.values["error_estimate"] = q.error;
  r.values["evaluations"] = q.evaluations;
  r.values["method"] = q.method == quadrature::Method::quadrature ? "quadrature" : "monte-carlo";
  r.summary.push_back("Klein-model volume = " + fmt(q.value) + " (error " + fmt(q.error, 3) + ")");
  r.verdict("converged", q.error <= std::max(a.tol * std::abs(q.value), 0.0) || q.value == 0.0,
            "error estimate within relative tolerance");
  if (all_ideal(s)) {
    double closed = hypgeom::ideal_simplex_volume(s);
    r.values["closed_form_volume"] = closed;
    double diff = std::abs(closed - q.value);
    r.values["closed_form_difference"] = diff;
    double allowed = std::max(10.0 * a.tol * std::abs(closed), 1e-12);
    r.verdict("closed_form_agreement", diff <= allowed, "|klein - D(shape)| <= 10 tol |D(shape)|");
    r.summary.push_back("closed form D(shape) = " + fmt(closed));
  }
  return r;
}

// dehn ------------------------------------------------------------------------

struct DehnArgs {
  std::string input;
  std::string mode;
  std::string geometry = "hyperbolic";
  double tol = pslq::Options{}.tolerance;
  std::int64_t max_coeff = pslq::Options{}.max_coeff;
  bool expect_zero = false;
};

Report dehn_cmd(const DehnArgs& a) {
  Report r;
  r.command = "dehn";
  Json j = json_io::read_file(a.input);
  r.inputs = {{"input", a.input}, {"geometry", a.geometry}, {"expect_zero", a.expect_zero}};
  pslq::Options opt;
  opt.tolerance = a.tol;
  opt.max_coeff = a.max_coeff;
  scissors::DehnTensor t;
  bool tensor_input = j.is_object() && j.contains("terms") && j.at("terms").is_array() && !j.at("terms").empty() &&
                      j.at("terms")[0].is_object() && j.at("terms")[0].contains("length");
  if (tensor_input) {
    t = json_io::dehn_tensor_from_json(j);
  } else if (a.geometry == "spherical") {
    t = scissors::spherical_dehn3(json_io::spherical_sum_from_json(j));
  } else if (a.geometry == "hyperbolic") {
    t = scissors::dehn3(json_io::scissor_sum_from_json(j));
  } else {
    throw Error(ErrorKind::malformed_input, "geometry must be hyperbolic or spherical");
  }
  if (a.mode == "exact") {
    t.mode = scissors::Mode::exact;
  } else if (a.mode == "numeric") {
    t.mode = scissors::Mode::numeric;
  } else if (!a.mode.empty()) {
    throw Error(ErrorKind::malformed_input, "mode must be exact or numeric");
  }
  r.inputs["mode"] = t.mode == scissors::Mode::exact ? "exact" : "numeric";
  r.precision = {{"arithmetic", t.mode == scissors::Mode::exact ? "exact" : "double with 50-digit relation search"},
                 {"relation_tolerance", a.tol},
                 {"max_coeff", a.max_coeff}};
  scissors::ReducedTensor red = scissors::reduce(t, opt);
  r.values["terms"] = t.terms.size();
  r.values["reduced"] = json_io::reduced_to_json(red);
  r.summary.push_back("reduced Dehn invariant: " + red.verdict.describe());
  if (a.expect_zero) r.verdict("zero", red.verdict.is_zero, red.verdict.describe());
  return r;
}

// bloch-check -----------------------------------------------------------------

struct BlochArgs {
  std::string input;
  int five_term = 0;
  std::uint64_t seed = 1;
};

Report bloch_cmd(const BlochArgs& a) {
  Report r;
  r.command = "bloch-check";
  r.precision = {{"arithmetic", "exact"}};
  if (!a.input.empty()) {
    Json j = json_io::read_file(a.input);
    r.inputs = {{"input", a.input}};
    const Json& elements = j.contains("elements") ? j.at("elements") : j.at("terms");
    bloch::GroupPtr g;
    bloch::PreBlochElement p;
    if (j.contains("generators")) {
      g = bloch::GeneratorGroup::make(json_io::generators_from_json(j.at("generators")));
      p = json_io::pre_bloch_from_json(elements, g);
    } else {
      p = json_io::pre_bloch_from_json(elements, bloch::GeneratorGroup::make({}));
      g = bloch::GeneratorGroup::prime_base(bloch::prime_support(p));
    }
    bloch::WedgeElement d = bloch::delta2(p, g);
    r.values["bloch_wigner_sum"] = p.bloch_wigner_sum();
    r.values["delta2"] = json_io::wedge_to_json(d);
    r.verdict("delta2_zero", d.is_zero(), "sum (1 - z) ^ z vanishes modulo torsion");
    r.summary.push_back("delta2 = " + d.to_string());
  }
  if (a.five_term > 0) {
    r.inputs["five_term_samples"] = a.five_term;
    r.inputs["seed"] = a.seed;
    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<int> coord(-30, 30);
    int zero = 0;
    for (int s = 0; s < a.five_term; ++s) {
      std::array<bloch::RationalPoint, 5> x;
      std::vector<Rational> seen;
      std::uniform_int_distribution<int> den(1, 6);
      for (auto& pt : x) {
        do {
          pt.value = Rational(coord(rng)) / Rational(den(rng));
        } while (std::find(seen.begin(), seen.end(), pt.value) != seen.end());
        seen.push_back(pt.value);
      }
      bloch::PreBlochElement rel = bloch::five_term_relator(x);
      bloch::GroupPtr g = bloch::GeneratorGroup::prime_base(bloch::prime_support(rel));
      if (bloch::delta2(rel, g).is_zero()) ++zero;
    }
    r.values["five_term_zero"] = zero;
    r.verdict("five_term_delta2", zero == a.five_term,
              std::to_string(zero) + "/" + std::to_string(a.five_term) + " random rational relators have delta2 = 0");
    r.summary.push_back("five-term relators with delta2 = 0: " + std::to_string(zero) + "/" + std::to_string(a.five_term));
  }
  if (a.input.empty() && a.five_term <= 0) throw Error(ErrorKind::malformed_input, "give --input or --five-term");
  return r;
}

// manifold-verify -------------------------------------------------------------

struct ManifoldArgs {
  std::string census;
  std::string input;
  double tol = 1e-9;
  double klein_tol = 1e-5;
  bool no_klein = false;
  bool override_gluing = false;
};

Report manifold_cmd(const ManifoldArgs& a) {
  Report r;
  r.command = "manifold-verify";
  manifold::ShapedTriangulation t;
  if (!a.census.empty()) {
    t = manifold::load_census(a.census);
    r.inputs["census"] = a.census;
  } else if (!a.input.empty()) {
    t = json_io::triangulation_from_json(json_io::read_file(a.input));
    r.inputs["input"] = a.input;
  } else {
    throw Error(ErrorKind::malformed_input, "give --census or --input");
  }
  r.inputs["tetrahedra"] = t.shapes.size();
  r.inputs["cusps"] = t.cusps;
  r.precision = {{"arithmetic", "double, exact for words and Dehn reduction"},
                 {"gluing_tolerance", a.tol},
                 {"klein_rel_tol", a.klein_tol}};

  double defect = manifold::max_gluing_defect(t);
  r.values["max_gluing_defect"] = defect;
  r.verdict("gluing", defect <= a.tol, "edge equations hold within " + fmt(a.tol, 3));

  double vol = manifold::volume(t, a.tol, a.override_gluing);
  r.values["volume"] = vol;
  r.summary.push_back("volume = sum D(z_i) = " + fmt(vol, 15));

  bool words = !t.shapes.empty();
  for (const auto& s : t.shapes) words = words && s.z_word && s.one_minus_z_word;
  if (words) {
    manifold::BlochReport b = manifold::bloch_element(t);
    r.values["delta2"] = json_io::wedge_to_json(b.delta);
    r.verdict("bloch_condition", b.delta.is_zero(), "sum (1 - z_i) ^ z_i = 0 modulo torsion");

    std::vector<Rational> sums = manifold::exact_angle_sums(t);
    bool two_pi = true;
    for (const auto& q : sums) two_pi = two_pi && q == 2;
    r.verdict("exact_angle_sums", two_pi, "every edge class has angle sum exactly 2 pi");

    manifold::DehnReport exact = manifold::dehn_check(t, scissors::Mode::exact);
    r.values["dehn_exact"] = json_io::reduced_to_json(exact.reduced);
    r.verdict("dehn_exact", exact.reduced.verdict.is_zero, exact.reduced.verdict.describe());

    bool invariant = true;
    for (int c = 0; c < std::max(t.cusps, 1); ++c) {
      std::vector<double> h(std::max(t.cusps, 1), 1.0);
      h[c] = 2.5;
      manifold::DehnReport moved = manifold::dehn_check(t, scissors::Mode::exact, h);
      invariant = invariant && moved.reduced.verdict.is_zero == exact.reduced.verdict.is_zero &&
                  moved.reduced.components.size() == exact.reduced.components.size();
    }
    r.verdict("horoball_invariance", invariant, "reduced tensor unchanged when any cusp's horoball is rescaled");
  }
  manifold::DehnReport numeric = manifold::dehn_check(t, scissors::Mode::numeric);
  r.values["dehn_numeric"] = json_io::reduced_to_json(numeric.reduced);
  r.verdict("dehn_numeric", numeric.reduced.verdict.is_zero, numeric.reduced.verdict.describe());

  if (!a.no_klein) {
    quadrature::Report k = manifold::klein_volume_sum(t, a.klein_tol);
    r.values["klein_volume"] = k.value;
    r.values["klein_error_estimate"] = k.error;
    double rel = vol != 0.0 ? std::abs(k.value - vol) / std::abs(vol) : std::abs(k.value);
    r.values["klein_relative_difference"] = rel;
    r.verdict("klein_agreement", rel <= 1e-3, "Klein-model integration matches sum D(z_i) to 1e-3 relative");
    r.summary.push_back("Klein-model volume = " + fmt(k.value, 10));
  }
  return r;
}

// period ----------------------------------------------------------------------

struct PeriodArgs {
  std::string input;
  double tol = 1e-6;
  std::string branch = "real";
};

Report period_cmd(const PeriodArgs& a) {
  Report r;
  r.command = "period";
  period::QuadricSimplexPair p = json_io::quadric_pair_from_json(json_io::read_file(a.input));
  r.inputs = {{"input", a.input}, {"branch", a.branch}, {"ruling", p.ruling}};
  r.precision = {{"arithmetic", "double"}, {"rel_tol", a.tol}};
  period::SqrtBranch branch = period::SqrtBranch::real;
  if (a.branch == "literal") {
    branch = period::SqrtBranch::literal;
  } else if (a.branch != "real") {
    throw Error(ErrorKind::malformed_input, "branch must be real or literal");
  }
  std::array<bool, 4> on_q{};
  std::array<Vec3, 4> v = period::pair_vertices(p, &on_q);
  Json verts = Json::array();
  for (int k = 0; k < 4; ++k) verts.push_back({{"x", {v[k][0], v[k][1], v[k][2]}}, {"on_quadric", on_q[k]}});
  r.values["vertices"] = verts;
  try {
    period::PeriodReport pr = period::period_integral(p, a.tol, branch);
    double c = period::period_constant(p.ruling);
    r.values["period"] = json_io::complex_to_json(pr.value);
    r.values["error_estimate"] = pr.error;
    r.values["evaluations"] = pr.evaluations;
    r.values["period_constant"] = c;
    r.values["volume_from_period"] = pr.value.real() / c;
    r.verdict("real", true, "imaginary part within tolerance");
    r.summary.push_back("period = " + fmt(pr.value.real()) + ", volume = period / c* = " + fmt(pr.value.real() / c));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::non_real) throw;
    r.values["error"] = e.what();
    r.verdict("real", false, e.what());
    r.summary.push_back(e.what());
  }
  return r;
}

// schlafli --------------------------------------------------------------------

struct SchlafliArgs {
  std::string input;
  std::string family = "moving-vertex";
  int vertex = 3;
  std::string direction = "0.05,-0.03,0.04";
  double t0 = 0.0;
  double step = 1e-4;
  double tol = 1e-3;
};

Report schlafli_cmd(const SchlafliArgs& a) {
  Report r;
  r.command = "schlafli";
  hypgeom::GeodesicSimplex s = json_io::simplex_from_json(json_io::read_file(a.input));
  r.inputs = {{"input", a.input}, {"family", a.family}, {"t0", a.t0}, {"step", a.step}};
  r.precision = {{"arithmetic", "extended (50 digits) for the family, volumes, angles and lengths"},
                 {"volume_rule", "conical Gauss, 30 points per direction"},
                 {"rel_tol", a.tol}};
  period::SimplexPath path;
  if (a.family == "moving-vertex") {
    if (a.vertex < 0 || a.vertex > 3) throw Error(ErrorKind::malformed_input, "vertex must be 0..3");
    Vec3 d = parse_vec3(a.direction);
    r.inputs["vertex"] = a.vertex;
    r.inputs["direction"] = {d[0], d[1], d[2]};
    path = period::moving_vertex_path(s, a.vertex, d);
  } else if (a.family == "dilation") {
    path = period::dilation_path(s);
  } else {
    throw Error(ErrorKind::malformed_input, "family must be moving-vertex or dilation");
  }
  period::SchlafliReport full = period::schlafli_defect(path, a.t0, a.step);
  period::SchlafliReport half = period::schlafli_defect(path, a.t0, a.step / 2);
  double ratio = half.defect > 0.0 ? full.defect / half.defect : 0.0;
  r.values["dvolume_dt"] = full.dvolume;
  r.values["schlafli_sum"] = full.schlafli_sum;
  r.values["defect"] = full.defect;
  r.values["relative_defect"] = full.relative;
  r.values["defect_half_step"] = half.defect;
  r.values["halving_ratio"] = ratio;
  r.verdict("schlafli", full.relative < a.tol, "|dV/dt + 1/2 sum l dtheta/dt| / |dV/dt| < " + fmt(a.tol, 3));
  r.summary.push_back("dV/dt = " + fmt(full.dvolume) + ", relative defect = " + fmt(full.relative, 3) +
                      ", halving ratio = " + fmt(ratio, 4));
  return r;
}

// spinor-check ----------------------------------------------------------------

struct SpinorArgs {
  int n = 2;
  int samples = 50;
  std::uint64_t seed = 7;
};

Report spinor_cmd(const SpinorArgs& a) {
  Report r;
  r.command = "spinor-check";
  r.inputs = {{"n", a.n}, {"samples", a.samples}, {"seed", a.seed}};
  r.precision = {{"arithmetic", "exact"}};
  if (a.n < 1 || a.n > 4) throw Error(ErrorKind::malformed_input, "n must be between 1 and 4");
  if (a.samples < 1) throw Error(ErrorKind::malformed_input, "samples must be positive");
  std::mt19937_64 rng(a.seed);

  std::vector<Rational> ones(static_cast<std::size_t>(a.n), Rational(1));
  spinor::PfIdentity cartan = spinor::pf_identity_check(spinor::SplitSoElement::cartan(ones));
  r.values["cartan_ratio"] = to_string(cartan.ratio);

  int hom = 0;
  int indeterminate = 0;
  int agree = 0;
  int evaluated = 0;
  for (int s = 0; s < a.samples; ++s) {
    spinor::SplitSoElement x = spinor::random_element(a.n, rng);
    spinor::SplitSoElement y = spinor::random_element(a.n, rng);
    spinor::SuperOperator sx = spinor::spin_rep(x);
    spinor::SuperOperator sy = spinor::spin_rep(y);
    if (spinor::spin_rep(spinor::bracket(x, y)) == sx * sy - sy * sx) ++hom;
    try {
      spinor::PfIdentity id = spinor::pf_identity_check(x);
      ++evaluated;
      if (id.ratio == cartan.ratio) ++agree;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::degenerate) throw;
      ++indeterminate;
    }
  }
  spinor::Matrix m = spinor::random_skew(static_cast<std::size_t>(2 * a.n), rng);
  Rational pf = spinor::pfaffian(m);
  bool pf_det = pf * pf == spinor::determinant(m);

  r.values["homomorphism_samples"] = hom;
  r.values["ratio_samples"] = evaluated;
  r.values["indeterminate_samples"] = indeterminate;
  r.values["c_n"] = to_string(cartan.ratio);
  r.verdict("homomorphism", hom == a.samples, std::to_string(hom) + "/" + std::to_string(a.samples) + " exact");
  bool unit = cartan.ratio == 1 || cartan.ratio == -1;
  r.verdict("constant_ratio", unit && agree == evaluated && evaluated > 0,
            "Str(rho(X)^n) / (n! Pf_split(X)) = " + to_string(cartan.ratio) + " on " + std::to_string(agree) + "/" +
                std::to_string(evaluated) + " samples");
  r.verdict("pfaffian_squared", pf_det, "Pf^2 = det on a random skew matrix");
  r.summary.push_back("c_" + std::to_string(a.n) + " = " + to_string(cartan.ratio));
  return r;
}

int emit(const Report& r, std::ostream& out, std::ostream& err) {
  out << r.to_json().dump(2) << "\n";
  bool ok = r.passed();
  err << r.command << ": " << (ok ? "PASS" : "FAIL") << "\n";
  for (const auto& line : r.summary) err << "  " << line << "\n";
  for (const auto& [k, v] : r.verdicts.items()) {
    err << "  [" << (v.at("pass").get<bool>() ? "pass" : "FAIL") << "] " << k << ": "
        << v.at("detail").get<std::string>() << "\n";
  }
  return ok ? 0 : 1;
}

int emit_error(const std::string& command, const Error& e, std::ostream& out, std::ostream& err) {
  int code = (e.kind() == ErrorKind::convergence || e.kind() == ErrorKind::non_real) ? 1 : 2;
  Json j{{"command", command}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  out << j.dump(2) << "\n";
  err << command << ": error: " << e.what() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic volumes, Dehn invariants, Bloch group and period checks", "scg"};
  app.require_subcommand(1);

  PolylogArgs pl;
  auto* c_pl = app.add_subcommand("polylog", "Evaluate a polylogarithm");
  c_pl->add_option("--fn", pl.fn, "li | bloch-wigner | sv-l3 | sv-ln | lobachevsky | zeta")->capture_default_str();
  c_pl->add_option("--z", pl.z, "Complex argument, e.g. \"0.5+0.866i\"");
  c_pl->add_option("--n", pl.n, "Weight for li, sv-ln and zeta")->capture_default_str();
  c_pl->add_option("--theta", pl.theta, "Angle for lobachevsky");
  c_pl->add_option("--precision", pl.precision, "double | extended")->capture_default_str();

  VolumeArgs vol;
  auto* c_vol = app.add_subcommand("simplex-volume", "Klein-model volume of a geodesic simplex");
  c_vol->add_option("--input", vol.input, "Simplex JSON")->required();
  c_vol->add_option("--tol", vol.tol, "Relative tolerance")->capture_default_str();
  c_vol->add_option("--max-evaluations", vol.max_evaluations, "Cubature budget")->capture_default_str();
  c_vol->add_option("--seed", vol.seed, "Monte Carlo seed")->capture_default_str();
  c_vol->add_flag("--monte-carlo", vol.force_monte_carlo, "Use stratified Monte Carlo only");

  DehnArgs dh;
  auto* c_dh = app.add_subcommand("dehn", "Reduced Dehn invariant of a scissor sum or Dehn tensor");
  c_dh->add_option("--input", dh.input, "ScissorSum or DehnTensor JSON")->required();
  c_dh->add_option("--mode", dh.mode, "exact | numeric");
  c_dh->add_option("--geometry", dh.geometry, "hyperbolic | spherical")->capture_default_str();
  c_dh->add_option("--tol", dh.tol, "Relation tolerance (numeric mode)")->capture_default_str();
  c_dh->add_option("--max-coeff", dh.max_coeff, "Largest relation coefficient")->capture_default_str();
  c_dh->add_flag("--expect-zero", dh.expect_zero, "Fail unless the reduced tensor is zero");

  BlochArgs bl;
  auto* c_bl = app.add_subcommand("bloch-check", "delta2 of a pre-Bloch element or of random five-term relators");
  c_bl->add_option("--input", bl.input, "JSON {generators, elements}");
  c_bl->add_option("--five-term", bl.five_term, "Number of random rational five-term relators");
  c_bl->add_option("--seed", bl.seed, "Seed for --five-term")->capture_default_str();

  ManifoldArgs mf;
  auto* c_mf = app.add_subcommand("manifold-verify", "Gluing, volume, Bloch and Dehn checks of a triangulation");
  auto* census_opt = c_mf->add_option("--census", mf.census, "figure8 | figure8_23 | whitehead");
  c_mf->add_option("--input", mf.input, "Triangulation JSON")->excludes(census_opt);
  c_mf->add_option("--tol", mf.tol, "Gluing tolerance")->capture_default_str();
  c_mf->add_option("--klein-tol", mf.klein_tol, "Relative tolerance of the Klein-model integration")->capture_default_str();
  c_mf->add_flag("--no-klein", mf.no_klein, "Skip the Klein-model cross-check");
  c_mf->add_flag("--override-gluing", mf.override_gluing, "Compute the volume even if gluing fails");

  PeriodArgs pd;
  auto* c_pd = app.add_subcommand("period", "Period of the quadric form over a simplex");
  c_pd->add_option("--input", pd.input, "QuadricSimplexPair JSON")->required();
  c_pd->add_option("--tol", pd.tol, "Relative tolerance")->capture_default_str();
  c_pd->add_option("--branch", pd.branch, "real | literal")->capture_default_str();

  SchlafliArgs sf;
  auto* c_sf = app.add_subcommand("schlafli", "Finite-difference check of the Schlafli formula");
  c_sf->add_option("--input", sf.input, "Compact simplex JSON")->required();
  c_sf->add_option("--family", sf.family, "moving-vertex | dilation")->capture_default_str();
  c_sf->add_option("--vertex", sf.vertex, "Moving vertex index")->capture_default_str();
  c_sf->add_option("--direction", sf.direction, "Velocity \"x,y,z\" of the moving vertex")->capture_default_str();
  c_sf->add_option("--t0", sf.t0, "Base parameter")->capture_default_str();
  c_sf->add_option("--step", sf.step, "Finite-difference step")->capture_default_str();
  c_sf->add_option("--tol", sf.tol, "Relative defect tolerance")->capture_default_str();

  SpinorArgs sp;
  auto* c_sp = app.add_subcommand("spinor-check", "Spin representation and Pfaffian identity checks");
  c_sp->add_option("--n", sp.n, "Rank n of so(2n)")->capture_default_str();
  c_sp->add_option("--samples", sp.samples, "Number of random samples")->capture_default_str();
  c_sp->add_option("--seed", sp.seed, "Seed")->capture_default_str();

  std::vector<std::string> storage = {"scg"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "polylog") return emit(polylog_cmd(pl), out, err);
    if (command == "simplex-volume") return emit(simplex_volume_cmd(vol), out, err);
    if (command == "dehn") return emit(dehn_cmd(dh), out, err);
    if (command == "bloch-check") return emit(bloch_cmd(bl), out, err);
    if (command == "manifold-verify") return emit(manifold_cmd(mf), out, err);
    if (command == "period") return emit(period_cmd(pd), out, err);
    if (command == "schlafli") return emit(schlafli_cmd(sf), out, err);
    if (command == "spinor-check") return emit(spinor_cmd(sp), out, err);
  } catch (const Error& e) {
    return emit_error(command, e, out, err);
  } catch (const json_io::Json::exception& e) {
    return emit_error(command, Error(ErrorKind::malformed_input, e.what()), out, err);
  }
  err << "error: unknown subcommand\n";
  return 2;
}

}  // namespace scg::cli
