#include "scg/scissors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/constants/constants.hpp>

namespace scg::scissors {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

int sign(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool point_less(const hypgeom::HPoint& a, const hypgeom::HPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.kind < b.kind;
}

bool point_equal(const hypgeom::HPoint& a, const hypgeom::HPoint& b) { return a.x == b.x && a.kind == b.kind; }

int permutation_parity(const std::array<int, 4>& perm) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

double det4(const std::array<Vec4, 4>& u) {
  std::array<std::array<double, 4>, 4> a{};
  for (int i = 0; i < 4; ++i) a[i] = u[i];
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (a[p][c] == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

void add_into(std::map<std::string, Rational>& m, const std::string& key, const Rational& q) {
  Rational& slot = m[key];
  slot += q;
  if (slot == 0) m.erase(key);
}

ReducedTensor reduce_exact(const DehnTensor& t) {
  std::map<std::pair<std::string, std::string>, Rational> acc;
  for (const auto& term : t.terms) {
    if (!term.angle.exact) throw Error(ErrorKind::not_exact, "angle without an exact form in exact mode");
    const ExactValue& a = *term.angle.exact;
    if (a.is_rational_pi()) continue;
    if (!term.length.exact) {
      throw Error(ErrorKind::not_exact, "inexact length paired with a non-torsion angle");
    }
    const ExactValue& l = *term.length.exact;
    for (const auto& [asym, aq] : a.symbols) {
      for (const auto& [lsym, lq] : l.symbols) acc[{lsym, asym}] += term.coeff * lq * aq;
      if (t.geometry == Geometry::hyperbolic && l.pi_multiple != 0) acc[{"pi", asym}] += term.coeff * l.pi_multiple * aq;
    }
  }
  ReducedTensor out;
  for (const auto& [key, q] : acc) {
    if (q == 0) continue;
    Component c;
    c.length_key = key.first;
    c.angle_key = key.second;
    c.coeff = q;
    out.components.push_back(c);
  }
  out.verdict.mode = Mode::exact;
  out.verdict.is_zero = out.components.empty();
  return out;
}

struct Weighted {
  double w;
  double theta;
};

std::vector<Weighted> merge_terms(std::vector<Weighted> items, double wtol, double atol) {
  auto is_torsion = [&](double th) { return th <= atol || th >= kPi - atol; };
  auto prune = [&](std::vector<Weighted>& v) {
    v.erase(std::remove_if(v.begin(), v.end(),
                           [&](const Weighted& x) { return std::abs(x.w) <= wtol || is_torsion(x.theta); }),
            v.end());
  };
  prune(items);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(items.begin(), items.end(), [](const Weighted& a, const Weighted& b) { return a.theta < b.theta; });
    std::vector<Weighted> next;
    for (const auto& it : items) {
      if (!next.empty() && std::abs(next.back().theta - it.theta) <= atol) {
        next.back().w += it.w;
        changed = true;
      } else {
        next.push_back(it);
      }
    }
    prune(next);
    std::sort(next.begin(), next.end(),
              [](const Weighted& a, const Weighted& b) { return std::abs(a.w) < std::abs(b.w); });
    items.clear();
    for (const auto& it : next) {
      if (!items.empty() && std::abs(std::abs(items.back().w) - std::abs(it.w)) <= wtol) {
        double s = sign(items.back().w) * sign(it.w);
        items.back().theta = angle_mod_pi(items.back().theta + s * it.theta);
        changed = true;
      } else {
        items.push_back(it);
      }
    }
    prune(items);
  }
  std::sort(items.begin(), items.end(), [](const Weighted& a, const Weighted& b) {
    return a.theta != b.theta ? a.theta < b.theta : a.w < b.w;
  });
  return items;
}

ReducedTensor reduce_numeric(const DehnTensor& t, const pslq::Options& opt) {
  std::vector<Weighted> items;
  double scale = 0.0;
  for (const auto& term : t.terms) {
    double w = to_double(term.coeff) * term.length.value;
    if (!std::isfinite(w) || !std::isfinite(term.angle.value)) throw Error(ErrorKind::domain, "non-finite Dehn term");
    items.push_back({w, angle_mod_pi(term.angle.value)});
    scale = std::max(scale, std::abs(w));
  }
  const double wtol = opt.tolerance * std::max(scale, 1.0);
  const double atol = opt.tolerance * kPi;
  items = merge_terms(std::move(items), wtol, atol);

  ReducedTensor out;
  out.verdict.mode = Mode::numeric;
  out.verdict.tolerance = opt.tolerance;
  out.verdict.digits = std::numeric_limits<double>::digits10;

  pslq::RationalBasis angles(opt);
  angles.seed(kPi);
  pslq::RationalBasis lengths(opt);
  const bool spherical = t.geometry == Geometry::spherical;
  if (spherical) lengths.seed(kPi);

  bool marginal = false;
  auto residual_check = [&](const std::vector<Rational>& coords, const std::vector<double>& basis, double value,
                            double sc) {
    double fit = 0.0;
    for (std::size_t k = 0; k < coords.size(); ++k) fit += to_double(coords[k]) * basis[k];
    if (std::abs(fit - value) > 1e-2 * opt.tolerance * std::max(sc, 1.0)) marginal = true;
  };

  std::vector<std::vector<Rational>> lcoords;
  std::vector<std::vector<Rational>> acoords;
  for (const auto& it : items) {
    acoords.push_back(angles.coordinates(it.theta));
    residual_check(acoords.back(), angles.basis(), it.theta, kPi);
    lcoords.push_back(lengths.coordinates(it.w));
    residual_check(lcoords.back(), lengths.basis(), it.w, scale);
  }

  std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t a = spherical ? 1 : 0; a < lcoords[i].size(); ++a) {
      if (lcoords[i][a] == 0) continue;
      for (std::size_t b = 1; b < acoords[i].size(); ++b) {
        if (acoords[i][b] == 0) continue;
        acc[{a, b}] += lcoords[i][a] * acoords[i][b];
      }
    }
  }
  for (const auto& [key, q] : acc) {
    if (q == 0) continue;
    Component c;
    c.length_key = "L" + std::to_string(key.first);
    c.angle_key = "A" + std::to_string(key.second);
    c.length_value = lengths.basis()[key.first];
    c.angle_value = angles.basis()[key.second];
    c.coeff = q;
    out.components.push_back(c);
  }
  out.verdict.is_zero = out.components.empty();
  if (marginal) out.verdict.warnings.emplace_back("relation residual close to tolerance; detection may be unstable");
  if (angles.basis().size() > 6 || lengths.basis().size() > 6) {
    out.verdict.warnings.emplace_back("large relation basis; relations with big coefficients may be missed");
  }
  return out;
}

}  // namespace

double angle_mod_pi(double theta) {
  double r = std::fmod(theta, kPi);
  if (r < 0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

ScissorSum normalize(const ScissorSum& s) {
  std::vector<ScissorTerm> terms;
  for (const auto& term : s.terms) {
    hypgeom::validate(term.simplex);
    if (hypgeom::is_degenerate(term.simplex) || term.coeff == 0) continue;
    std::array<int, 4> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return point_less(term.simplex.vertices[a], term.simplex.vertices[b]);
    });
    ScissorTerm out;
    out.coeff = term.coeff * term.simplex.orientation * permutation_parity(perm);
    out.simplex.orientation = 1;
    for (int k = 0; k < 4; ++k) {
      out.simplex.vertices[k] = term.simplex.vertices[perm[k]];
      if (auto it = term.horoballs.find(perm[k]); it != term.horoballs.end()) out.horoballs[k] = it->second;
    }
    for (int k = 0; k < 3; ++k) {
      if (point_equal(out.simplex.vertices[k], out.simplex.vertices[k + 1])) {
        throw Error(ErrorKind::degenerate, "simplex with repeated vertices");
      }
    }
    terms.push_back(out);
  }
  auto key_less = [](const ScissorTerm& a, const ScissorTerm& b) {
    for (int k = 0; k < 4; ++k) {
      if (!point_equal(a.simplex.vertices[k], b.simplex.vertices[k])) {
        return point_less(a.simplex.vertices[k], b.simplex.vertices[k]);
      }
    }
    return a.horoballs < b.horoballs;
  };
  std::stable_sort(terms.begin(), terms.end(), key_less);
  ScissorSum out;
  for (const auto& term : terms) {
    if (!out.terms.empty() && !key_less(out.terms.back(), term) && !key_less(term, out.terms.back())) {
      out.terms.back().coeff += term.coeff;
    } else {
      out.terms.push_back(term);
    }
  }
  out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(), [](const ScissorTerm& t) { return t.coeff == 0; }),
                  out.terms.end());
  return out;
}

ExactValue ExactValue::pi_times(const Rational& q) {
  ExactValue v;
  v.pi_multiple = q;
  return v;
}

ExactValue ExactValue::symbol(const std::string& name, const Rational& q) {
  ExactValue v;
  if (q != 0) v.symbols[name] = q;
  return v;
}

ExactValue ExactValue::operator+(const ExactValue& o) const {
  ExactValue v = *this;
  v.pi_multiple += o.pi_multiple;
  for (const auto& [k, q] : o.symbols) add_into(v.symbols, k, q);
  return v;
}

ExactValue ExactValue::operator-(const ExactValue& o) const { return *this + o * Rational(-1); }

ExactValue ExactValue::operator*(const Rational& q) const {
  ExactValue v;
  if (q == 0) return v;
  v.pi_multiple = pi_multiple * q;
  for (const auto& [k, c] : symbols) v.symbols[k] = c * q;
  return v;
}

DehnTensor DehnTensor::plus(const DehnTensor& other, const Rational& q) const {
  if (mode != other.mode) throw Error(ErrorKind::domain, "cannot combine exact and numeric Dehn tensors");
  if (geometry != other.geometry) throw Error(ErrorKind::domain, "cannot combine hyperbolic and spherical tensors");
  DehnTensor out = *this;
  for (auto term : other.terms) {
    term.coeff *= q;
    out.terms.push_back(term);
  }
  return out;
}

DehnTensor dehn3(const ScissorSum& s) {
  DehnTensor out;
  out.mode = Mode::numeric;
  out.geometry = Geometry::hyperbolic;
  for (const auto& term : normalize(s).terms) {
    const auto& simplex = term.simplex;
    for (int k = 0; k < 4; ++k) {
      if (simplex.vertices[k].is_ideal() && !term.horoballs.count(k)) {
        throw Error(ErrorKind::missing_horoball, "ideal vertex " + std::to_string(k) + " has no horoball");
      }
    }
    int sgn = sign(hypgeom::euclidean_orientation_det(simplex));
    Rational f = Rational(term.coeff * simplex.orientation * sgn);
    auto angles = hypgeom::dihedral_angles(simplex);
    for (int e = 0; e < 6; ++e) {
      double len = hypgeom::edge_length(simplex, hypgeom::kEdges[e], term.horoballs);
      out.terms.push_back({f, Quantity::numeric(len), Quantity::numeric(angle_mod_pi(angles[e]))});
    }
  }
  return out;
}

DehnTensor spherical_dehn3(const SphericalSum& s) {
  DehnTensor out;
  out.mode = Mode::numeric;
  out.geometry = Geometry::spherical;
  for (const auto& term : s.terms) {
    if (term.orientation != 1 && term.orientation != -1) throw Error(ErrorKind::domain, "orientation must be +1 or -1");
    auto lengths = hypgeom::spherical_edge_lengths(term.vertices);
    auto angles = hypgeom::spherical_dihedral_angles(term.vertices);
    int sgn = sign(det4(term.vertices));
    Rational f = Rational(term.coeff * term.orientation * sgn);
    if (f == 0) continue;
    for (int e = 0; e < 6; ++e) {
      out.terms.push_back({f, Quantity::numeric(lengths[e]), Quantity::numeric(angle_mod_pi(angles[e]))});
    }
  }
  return out;
}

std::string Verdict::describe() const {
  std::ostringstream os;
  if (mode == Mode::exact) {
    os << (is_zero ? "zero (exact)" : "nonzero (exact)");
  } else if (is_zero) {
    os << "zero within detected relations (tolerance " << tolerance << ", " << digits << " digits)";
  } else {
    os << "nonzero at precision " << digits << " digits (tolerance " << tolerance << ")";
  }
  for (const auto& w : warnings) os << "; warning: " << w;
  return os.str();
}

ReducedTensor reduce(const DehnTensor& t, const pslq::Options& opt) {
  return t.mode == Mode::exact ? reduce_exact(t) : reduce_numeric(t, opt);
}

}  // namespace scg::scissors
