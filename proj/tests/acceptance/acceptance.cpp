// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "geometry.hpp"
#include "oracle.hpp"
#include "scg/bloch.hpp"
#include "scg/hypgeom.hpp"
#include "scg/manifold.hpp"
#include "scg/period.hpp"
#include "scg/polylog.hpp"
#include "scg/spinor.hpp"

using namespace scg;
using hypgeom::GeodesicSimplex;
using hypgeom::HPoint;

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rational q(int a, int b = 1) { return Rational(a) / Rational(b); }

GeodesicSimplex finite_simplex(const std::array<Vec3, 4>& v) {
  GeodesicSimplex s;
  for (int k = 0; k < 4; ++k) s.vertices[k] = HPoint::finite(v[k]);
  return s;
}

// 1 ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
  auto t0 = Clock::now();
  double d6 = polylog::bloch_wigner(std::polar(1.0, kPi / 3));
  double di = polylog::bloch_wigner(Complex(0.0, 1.0));
  double s = seconds_since(t0);
  double ref6 = static_cast<double>(oracle::clausen2_rational(1, 6));
  auto series_i = oracle::bloch_wigner_series(ExtComplex(ExtReal(0), ExtReal(1)));
  double refi = series_i ? static_cast<double>(*series_i) : std::nan("");
  o.detail << "D(e^{i pi/3}) = " << d6 << " (err " << std::abs(d6 - ref6) << "), D(i) = " << di << " (err "
           << std::abs(di - refi) << ", Catalan err " << std::abs(di - static_cast<double>(oracle::catalan()))
           << "), " << s << " s";
  o.require(std::abs(d6 - ref6) <= 1e-12, "D(e^{i pi/3}) vs oracle");
  o.require(std::abs(d6 - 1.0149416064096537) <= 1e-12, "D(e^{i pi/3}) vs stated value");
  o.require(std::abs(di - refi) <= 1e-12, "D(i) vs series oracle");
  o.require(std::abs(di - 0.9159655941772190) <= 1e-12, "D(i) vs Catalan");
  o.require(s < 1.0, "runtime");
}

// 2 ---------------------------------------------------------------------------

void criterion2(Outcome& o) {
  auto t0 = Clock::now();
  double ref_fig8 = 2.0 * static_cast<double>(oracle::clausen2_rational(1, 6));
  double ref_wh = 4.0 * static_cast<double>(oracle::catalan());
  struct Case {
    const char* name;
    double ref;
  };
  for (Case c : {Case{"figure8", ref_fig8}, Case{"figure8_23", ref_fig8}, Case{"whitehead", ref_wh}}) {
    auto t = manifold::load_census(c.name);
    double v = manifold::volume(t);
    double k = manifold::klein_volume_sum(t, 1e-5).value;
    double rel = std::abs(k - c.ref) / c.ref;
    o.detail << c.name << " " << v << " (err " << std::abs(v - c.ref) << ", klein rel " << rel << "); ";
    o.require(std::abs(v - c.ref) <= 1e-10, std::string(c.name) + " volume");
    o.require(rel <= 1e-3, std::string(c.name) + " klein volume");
  }
  double s = seconds_since(t0);
  o.detail << s << " s";
  o.require(s < 30.0, "runtime");
}

// 3 ---------------------------------------------------------------------------

void criterion3(Outcome& o) {
  for (const char* name : {"figure8", "whitehead"}) {
    auto r = manifold::bloch_element(manifold::load_census(name));
    o.detail << name << " delta2 = " << (r.delta.is_zero() ? "0" : r.delta.to_string()) << "; ";
    o.require(r.delta.is_zero(), name);
  }
  auto t = manifold::load_census("whitehead");
  auto g = bloch::GeneratorGroup::make({{"i", Complex(0.0, 1.0), 4}, {"1-i", Complex(1.0, -1.0), 0}});
  t.generators = g->generators();
  for (std::size_t k = 0; k < t.shapes.size(); ++k) {
    t.shapes[k].z_word = k == 0 ? manifold::Word{{"i", 1}, {"1-i", 1}} : manifold::Word{{"1-i", -1}};
    t.shapes[k].one_minus_z_word = k == 0 ? manifold::Word{{"i", 3}} : manifold::Word{{"i", 3}, {"1-i", -1}};
  }
  auto r = manifold::bloch_element(manifold::resolve_words(t));
  o.detail << "whitehead over {i, 1-i} delta2 = " << (r.delta.is_zero() ? "0" : r.delta.to_string());
  o.require(r.delta.is_zero(), "whitehead over {i, 1-i}");
}

// 4 ---------------------------------------------------------------------------

void criterion4(Outcome& o) {
  for (const char* name : {"figure8", "whitehead"}) {
    auto t = manifold::load_census(name);
    auto base = manifold::dehn_check(t, scissors::Mode::exact);
    o.require(base.reduced.verdict.is_zero, std::string(name) + " exact Dehn");
    std::size_t rescaled = 0;
    for (int c = 0; c < t.cusps; ++c) {
      for (double h : {0.25, 2.5, 17.0}) {
        std::vector<double> hs(t.cusps, 1.0);
        hs[c] = h;
        auto r = manifold::dehn_check(t, scissors::Mode::exact, hs);
        o.require(r.reduced.verdict.is_zero && r.reduced.components.size() == base.reduced.components.size(),
                  std::string(name) + " rescaled cusp " + std::to_string(c));
        ++rescaled;
      }
    }
    o.detail << name << ": " << base.reduced.verdict.describe() << ", " << rescaled << " rescalings unchanged; ";
  }
}

// 5 ---------------------------------------------------------------------------

void criterion5(Outcome& o) {
  std::mt19937_64 rng(5005);
  std::normal_distribution<double> g;
  double worst = 0.0;
  int done = 0;
  while (done < 1000) {
    std::array<ProjectivePoint, 5> x;
    for (auto& p : x) p = Complex(g(rng), g(rng));
    double min_gap = 1e300;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) min_gap = std::min(min_gap, std::abs(x[i].value - x[j].value));
    }
    if (min_gap < 1e-3) continue;
    worst = std::max(worst, polylog::five_term_defect(x));
    ++done;
  }
  o.detail << "max complex defect " << worst << " over " << done << "; ";
  o.require(worst < 1e-9, "complex five-term defect");

  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 6);
  int exact = 0;
  int zero = 0;
  while (exact < 20) {
    std::array<bloch::RationalPoint, 5> x;
    for (auto& p : x) p = {q(num(rng), den(rng)), false};
    bool distinct = true;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) distinct = distinct && x[i].value != x[j].value;
    }
    if (!distinct) continue;
    auto r = bloch::five_term_relator(x);
    auto base = bloch::GeneratorGroup::prime_base(bloch::prime_support(r));
    if (bloch::delta2(r, base).is_zero()) ++zero;
    ++exact;
  }
  o.detail << zero << "/" << exact << " rational relators with delta2 = 0";
  o.require(zero == exact, "rational delta2");
}

// 6 ---------------------------------------------------------------------------

void criterion6(Outcome& o) {
  std::mt19937_64 rng(6006);
  std::uniform_real_distribution<double> lr(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> th(-kPi, kPi);
  double e2 = 0.0;
  double e3 = 0.0;
  for (int k = 0; k < 100; ++k) {
    Complex z = std::polar(std::exp(lr(rng)), th(rng));
    e2 = std::max(e2, std::abs(polylog::sv_ln(2, z) - polylog::bloch_wigner(z)));
    e3 = std::max(e3, std::abs(polylog::sv_ln(3, z) - polylog::sv_l3(z)));
  }
  o.detail << "max |L2 - D| = " << e2 << ", max |L3 - sv_l3| = " << e3;
  o.require(e2 <= 1e-10 && e3 <= 1e-10, "agreement");
}

// 7 ---------------------------------------------------------------------------

void criterion7(Outcome& o) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(7007);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    std::array<Vec3, 5> p;
    for (auto& x : p) x = oracle::random_ball_point(rng, 0.85);
    double sum = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 5; ++i) {
      std::array<Vec3, 4> face;
      int m = 0;
      for (int j = 0; j < 5; ++j) {
        if (j != i) face[m++] = p[j];
      }
      double v = period::klein_volume(finite_simplex(face), 1e-7).value;
      sum += (i % 2 == 0 ? 1.0 : -1.0) * v;
      scale += std::abs(v);
    }
    worst = std::max(worst, std::abs(sum) / scale);
  }
  double s = seconds_since(t0);
  o.detail << "max relative alternating sum " << worst << ", " << s << " s";
  o.require(worst < 1e-3, "cocycle");
  o.require(s < 60.0, "runtime");
}

// 8 ---------------------------------------------------------------------------

void criterion8(Outcome& o) {
  GeodesicSimplex base = finite_simplex({Vec3{0.5, 0.0, 0.0}, Vec3{0.0, 0.5, 0.0}, Vec3{0.0, 0.0, 0.5},
                                         Vec3{-0.2, -0.2, -0.2}});
  auto path = period::moving_vertex_path(base, 3, {0.05, -0.03, 0.04});
  auto a = period::schlafli_defect(path, 0.0, 1e-4);
  auto b = period::schlafli_defect(path, 0.0, 5e-5);
  double ratio = a.defect / b.defect;
  o.detail << "dV/dt " << a.dvolume << ", relative defect " << a.relative << " (step 1e-4), halving ratio " << ratio;
  o.require(a.relative < 1e-3, "relative defect");
  o.require(std::abs(ratio - 4.0) < 0.5, "second-order ratio");
}

// 9 ---------------------------------------------------------------------------

void criterion9(Outcome& o) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(9009);
  int homs = 0;
  for (int n : {2, 3}) {
    std::optional<Rational> c;
    int ratio_samples = 0;
    for (int k = 0; k < 50; ++k) {
      auto x = spinor::random_element(n, rng);
      auto y = spinor::random_element(n, rng);
      auto rx = spinor::spin_rep(x);
      auto ry = spinor::spin_rep(y);
      bool ok = rx * ry - ry * rx == spinor::spin_rep(spinor::bracket(x, y));
      o.require(ok, "homomorphism n = " + std::to_string(n));
      homs += ok;
      if (spinor::pf_split(x) == 0) continue;
      Rational r = spinor::pf_identity_check(x).ratio;
      if (!c) c = r;
      o.require(r == *c, "constant ratio n = " + std::to_string(n));
      ++ratio_samples;
    }
    o.require(c && (*c == 1 || *c == -1), "c_n in {+1, -1}");
    o.detail << "c_" << n << " = " << (c ? to_string(*c) : "?") << " (" << ratio_samples << " samples); ";
  }
  int pf = 0;
  for (std::size_t size : {4u, 6u}) {
    for (int k = 0; k < 20; ++k) {
      auto a = spinor::random_skew(size, rng);
      Rational p = spinor::pfaffian(a);
      bool ok = p * p == spinor::determinant(a);
      o.require(ok, "pfaffian squared");
      pf += ok;
    }
  }
  double s = seconds_since(t0);
  o.detail << homs << "/100 homomorphism checks, " << pf << "/40 Pf^2 = det, " << s << " s";
  o.require(s < 10.0, "runtime");
}

// 10 --------------------------------------------------------------------------

void criterion10(Outcome& o) {
  std::mt19937_64 rng(10010);
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<double> ratios;
  double worst_imag = 0.0;
  int attempts = 0;
  while (ratios.size() < 6 && attempts < 100) {
    ++attempts;
    std::array<std::array<Rational, 3>, 4> pts;
    std::array<Vec3, 4> v;
    for (int k = 0; k < 4; ++k) {
      for (int c = 0; c < 3; ++c) {
        pts[k][c] = q(num(rng), 20);
        v[k][c] = to_double(pts[k][c]);
      }
    }
    GeodesicSimplex s = finite_simplex(v);
    if (hypgeom::is_degenerate(s, 1e-3) || std::abs(hypgeom::euclidean_orientation_det(s)) < 1e-3) continue;
    bool inside = true;
    for (const auto& x : v) inside = inside && dot(x, x) < 0.9;
    if (!inside) continue;
    auto proj = hypgeom::from_affine(pts);
    period::QuadricSimplexPair pair;
    pair.q = hypgeom::unit_sphere_form();
    for (int k = 0; k < 4; ++k) pair.planes[k] = hypgeom::face_covector(proj, k);
    auto p = period::period_integral(pair, 1e-8);
    double vol = std::abs(period::klein_volume(s, 1e-8).value);
    ratios.push_back(std::abs(p.value.real()) / vol);
    worst_imag = std::max(worst_imag, std::abs(p.value.imag()) / std::abs(p.value));
  }
  {
    period::QuadricSimplexPair pair;
    for (auto& row : pair.q) row.fill(0);
    pair.q[0][0] = -1;
    pair.q[1][1] = pair.q[2][2] = pair.q[3][3] = 3;
    pair.planes = {hypgeom::RVec4{q(1), q(3), q(3), q(3)}, hypgeom::RVec4{q(1), q(3), q(-3), q(-3)},
                   hypgeom::RVec4{q(1), q(-3), q(3), q(-3)}, hypgeom::RVec4{q(1), q(-3), q(-3), q(3)}};
    auto p = period::period_integral(pair, 1e-6);
    const double s = 1.0 / std::sqrt(3.0);
    GeodesicSimplex ideal;
    ideal.vertices = {HPoint::ideal({s, s, s}), HPoint::ideal({s, -s, -s}), HPoint::ideal({-s, s, -s}),
                      HPoint::ideal({-s, -s, s})};
    double vol = std::abs(period::klein_volume(ideal, 1e-6).value);
    ratios.push_back(std::abs(p.value.real()) / vol);
    worst_imag = std::max(worst_imag, std::abs(p.value.imag()) / std::abs(p.value));
  }
  double lo = *std::min_element(ratios.begin(), ratios.end());
  double hi = *std::max_element(ratios.begin(), ratios.end());
  double spread = (hi - lo) / lo;
  o.detail << ratios.size() << " simplices, ratio " << lo << " .. " << hi << " (c* = " << period::period_constant(1)
           << "), spread " << spread << ", max relative imaginary part " << worst_imag;
  o.require(ratios.size() >= 6, "enough simplices");
  o.require(spread < 1e-3, "constant ratio");
  o.require(worst_imag < 1e-6, "real periods");
}

// 11 --------------------------------------------------------------------------

void criterion11(Outcome& o) {
  std::mt19937_64 rng(11011);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  int checked = 0;
  int skipped = 0;
  int attempts = 0;
  while (checked < 50 && attempts < 500) {
    ++attempts;
    std::array<std::array<Rational, 3>, 4> pts;
    for (auto& p : pts) {
      for (auto& c : p) c = q(num(rng), den(rng) * 4);
    }
    auto s = hypgeom::from_affine(pts);
    try {
      auto d = hypgeom::polar_dual(s, hypgeom::unit_sphere_form());
      o.require(hypgeom::polar_dual(d, hypgeom::unit_sphere_form()) == s, "involution");
      ++checked;
    } catch (const Error&) {
      ++skipped;
    }
  }
  o.detail << checked << " rational simplices, double dual equal to input (" << skipped
           << " tangent or flat samples skipped)";
  o.require(checked >= 50, "enough samples");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Bloch-Wigner values", criterion1},
      {"census volumes", criterion2},
      {"Bloch condition", criterion3},
      {"extended Dehn invariant", criterion4},
      {"five-term relation", criterion5},
      {"single-valued polylogarithms", criterion6},
      {"volume cocycle", criterion7},
      {"Schlafli formula", criterion8},
      {"spin representation and Pfaffian", criterion9},
      {"quadric period", criterion10},
      {"polar duality", criterion11},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu %s  %s: %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
