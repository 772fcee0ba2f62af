#include "scg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace scg::quadrature {

namespace {

struct RulePoint {
  std::array<double, 4> bary;
  double weight;
};

using Rule = std::vector<RulePoint>;

void compositions(int total, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    current.push_back(k);
    compositions(total - k, parts - 1, current, out);
    current.pop_back();
  }
}

/// Grundmann-Moller rule of degree 2s + 1 on the reference tetrahedron (volume 1/6).
Rule grundmann_moller(int s) {
  const int n = 3;
  const int d = 2 * s + 1;
  Rule rule;
  for (int i = 0; i <= s; ++i) {
    double w = std::pow(2.0, -2 * s) * std::pow(static_cast<double>(d + n - 2 * i), d) /
               (std::tgamma(i + 1.0) * std::tgamma(static_cast<double>(d + n - i) + 1.0));
    if (i % 2 == 1) w = -w;
    std::vector<std::vector<int>> betas;
    std::vector<int> cur;
    compositions(s - i, 4, cur, betas);
    for (const auto& beta : betas) {
      RulePoint p;
      for (int j = 0; j < 4; ++j) p.bary[j] = (2.0 * beta[j] + 1.0) / (d + n - 2 * i);
      p.weight = w;
      rule.push_back(p);
    }
  }
  return rule;
}

const Rule& rule7() {
  static const Rule r = grundmann_moller(3);
  return r;
}

const Rule& rule5() {
  static const Rule r = grundmann_moller(2);
  return r;
}

double abs_det(const Tetrahedron& t) { return std::abs(det3(t[1] - t[0], t[2] - t[0], t[3] - t[0])); }

Vec3 at(const Tetrahedron& t, const std::array<double, 4>& b) {
  Vec3 x{0.0, 0.0, 0.0};
  for (int j = 0; j < 4; ++j) {
    for (int c = 0; c < 3; ++c) x[c] += b[j] * t[j][c];
  }
  return x;
}

Vec3 midpoint(const Vec3& a, const Vec3& b) { return 0.5 * (a + b); }

struct Cell {
  Tetrahedron t;
  std::array<bool, 4> singular;
  double value = 0.0;
  double error = 0.0;
  std::int64_t id = 0;
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.id > b.id;
  }
};

void evaluate(const Integrand& f, Cell& c, std::int64_t& evals) {
  double jac = abs_det(c.t);
  double q7 = 0.0;
  for (const auto& p : rule7()) q7 += p.weight * f(at(c.t, p.bary));
  double q5 = 0.0;
  for (const auto& p : rule5()) q5 += p.weight * f(at(c.t, p.bary));
  evals += static_cast<std::int64_t>(rule7().size() + rule5().size());
  c.value = jac * q7;
  c.error = jac * std::abs(q7 - q5);
}

double diameter(const Tetrahedron& t) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) d = std::max(d, norm(t[i] - t[j]));
  }
  return d;
}

std::vector<Cell> split(const Cell& c) {
  std::vector<Cell> out;
  int s = -1;
  for (int k = 0; k < 4; ++k) {
    if (c.singular[k]) {
      s = k;
      break;
    }
  }
  if (s >= 0) {
    std::array<int, 3> o{};
    int n = 0;
    for (int k = 0; k < 4; ++k) {
      if (k != s) o[n++] = k;
    }
    const Vec3& a = c.t[o[0]];
    const Vec3& b = c.t[o[1]];
    const Vec3& cc = c.t[o[2]];
    Vec3 ma = midpoint(c.t[s], a);
    Vec3 mb = midpoint(c.t[s], b);
    Vec3 mc = midpoint(c.t[s], cc);
    bool sa = c.singular[o[0]];
    bool sb = c.singular[o[1]];
    bool sc = c.singular[o[2]];
    out.push_back({{c.t[s], ma, mb, mc}, {true, false, false, false}});
    out.push_back({{ma, mb, mc, a}, {false, false, false, sa}});
    out.push_back({{mb, mc, a, b}, {false, false, sa, sb}});
    out.push_back({{mc, a, b, cc}, {false, sa, sb, sc}});
    return out;
  }
  int bi = 0;
  int bj = 1;
  double best = -1.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      double l = norm(c.t[i] - c.t[j]);
      if (l > best) {
        best = l;
        bi = i;
        bj = j;
      }
    }
  }
  Vec3 m = midpoint(c.t[bi], c.t[bj]);
  Cell a = c;
  Cell b = c;
  a.t[bj] = m;
  b.t[bi] = m;
  a.singular[bj] = false;
  b.singular[bi] = false;
  out.push_back(a);
  out.push_back(b);
  return out;
}

/// Uniform point in a tetrahedron from four uniforms (normalized exponentials).
Vec3 sample(const Tetrahedron& t, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::array<double, 4> e{};
  double sum = 0.0;
  for (double& v : e) {
    double x = u(rng);
    while (x <= 0.0) x = u(rng);
    v = -std::log(x);
    sum += v;
  }
  for (double& v : e) v /= sum;
  return at(t, e);
}

Report monte_carlo(const Integrand& f, const std::vector<Cell>& cells, const Options& opt) {
  Report r;
  r.method = Method::monte_carlo;
  double total_vol = 0.0;
  for (const auto& c : cells) total_vol += abs_det(c.t) / 6.0;
  double value = 0.0;
  double variance = 0.0;
  for (const auto& c : cells) {
    double vol = abs_det(c.t) / 6.0;
    auto n = std::max<std::int64_t>(16, static_cast<std::int64_t>(opt.monte_carlo_samples * vol / total_vol));
    std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(c.id + 1)));
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
      double y = f(sample(c.t, rng));
      double delta = y - mean;
      mean += delta / static_cast<double>(k + 1);
      m2 += delta * (y - mean);
    }
    r.evaluations += n;
    value += vol * mean;
    variance += vol * vol * (m2 / static_cast<double>(n - 1)) / static_cast<double>(n);
  }
  r.value = value;
  r.error = 3.0 * std::sqrt(variance);
  return r;
}

}  // namespace

double euclidean_volume(const Tetrahedron& t) { return abs_det(t) / 6.0; }

double grundmann_moller_weight_sum(int s) {
  double sum = 0.0;
  for (const auto& p : grundmann_moller(s)) sum += p.weight;
  return sum;
}

Report integrate(const Integrand& f, const Tetrahedron& t, const std::array<bool, 4>& singular, const Options& opt) {
  Report report;
  if (abs_det(t) == 0.0) return report;
  std::int64_t next_id = 0;
  std::int64_t evals = 0;
  Cell root{t, singular};
  root.id = next_id++;
  evaluate(f, root, evals);

  std::priority_queue<Cell, std::vector<Cell>, CellOrder> queue;
  std::vector<Cell> frozen;
  double value = root.value;
  double error = root.error;
  queue.push(root);
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(value)); };

  if (!opt.force_monte_carlo) {
    while (error > target() && evals < opt.max_evaluations && !queue.empty()) {
      Cell worst = queue.top();
      queue.pop();
      bool corner = std::any_of(worst.singular.begin(), worst.singular.end(), [](bool b) { return b; });
      if (corner && diameter(worst.t) < opt.min_corner_size) {
        frozen.push_back(worst);
        continue;
      }
      value -= worst.value;
      error -= worst.error;
      for (Cell child : split(worst)) {
        child.id = next_id++;
        evaluate(f, child, evals);
        value += child.value;
        error += child.error;
        queue.push(child);
      }
    }
    // Re-sum to remove drift from the running updates.
    std::vector<Cell> cells = frozen;
    while (!queue.empty()) {
      cells.push_back(queue.top());
      queue.pop();
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
    value = 0.0;
    error = 0.0;
    for (const auto& c : cells) {
      value += c.value;
      error += c.error;
    }
    report.value = value;
    report.error = error;
    report.evaluations = evals;
    if (error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) return report;
    Report mc = monte_carlo(f, cells, opt);
    mc.evaluations += evals;
    if (mc.error < report.error) report = mc;
  } else {
    report = monte_carlo(f, {root}, opt);
    report.evaluations += evals;
  }
  if (report.error > std::max(opt.abs_tol, opt.rel_tol * std::abs(report.value))) {
    throw Error(ErrorKind::convergence, "integration did not reach the requested tolerance (estimate " +
                                            std::to_string(report.value) + ", error " +
                                            std::to_string(report.error) + ")");
  }
  return report;
}

namespace {

template <class Real>
void conical_nodes(int points, std::vector<Real>& x, std::vector<Real>& w) {
  auto load = [&](const auto& abscissa, const auto& weights) {
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      Real a = abscissa[i];
      Real wi = weights[i];
      if (a == 0) {
        x.push_back(Real(0.5));
        w.push_back(wi / 2);
      } else {
        x.push_back((1 + a) / 2);
        w.push_back(wi / 2);
        x.push_back((1 - a) / 2);
        w.push_back(wi / 2);
      }
    }
  };
  using boost::math::quadrature::gauss;
  switch (points) {
    case 7: load(gauss<Real, 7>::abscissa(), gauss<Real, 7>::weights()); break;
    case 10: load(gauss<Real, 10>::abscissa(), gauss<Real, 10>::weights()); break;
    case 15: load(gauss<Real, 15>::abscissa(), gauss<Real, 15>::weights()); break;
    case 20: load(gauss<Real, 20>::abscissa(), gauss<Real, 20>::weights()); break;
    case 25: load(gauss<Real, 25>::abscissa(), gauss<Real, 25>::weights()); break;
    case 30: load(gauss<Real, 30>::abscissa(), gauss<Real, 30>::weights()); break;
    default: throw Error(ErrorKind::domain, "unsupported Gauss order " + std::to_string(points));
  }
}

}  // namespace

ExtReal conical_gauss(const ExtIntegrand& f, const ExtTetrahedron& t, int points) {
  std::vector<ExtReal> x;
  std::vector<ExtReal> w;
  conical_nodes(points, x, w);
  auto diff = [](const ExtVec3& a, const ExtVec3& b) { return ExtVec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  const ExtVec3 e1 = diff(t[1], t[0]);
  const ExtVec3 e2 = diff(t[2], t[1]);
  const ExtVec3 e3 = diff(t[3], t[2]);
  ExtReal det = e1[0] * (e2[1] * e3[2] - e2[2] * e3[1]) - e1[1] * (e2[0] * e3[2] - e2[2] * e3[0]) +
                e1[2] * (e2[0] * e3[1] - e2[1] * e3[0]);
  ExtReal sum = 0;
  ExtVec3 p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      ExtReal inner = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        for (int c = 0; c < 3; ++c) p[c] = t[0][c] + x[i] * (e1[c] + x[j] * (e2[c] + x[k] * e3[c]));
        inner += w[k] * f(p);
      }
      sum += w[i] * w[j] * x[i] * x[i] * x[j] * inner;
    }
  }
  return abs(det) * sum;
}

double conical_gauss(const Integrand& f, const Tetrahedron& t, int points) {
  std::vector<double> x;
  std::vector<double> w;
  conical_nodes(points, x, w);
  const Vec3 e1 = t[1] - t[0];
  const Vec3 e2 = t[2] - t[1];
  const Vec3 e3 = t[3] - t[2];
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double u1 = x[i];
    for (std::size_t j = 0; j < x.size(); ++j) {
      double u2 = x[j];
      double inner = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        double u3 = x[k];
        Vec3 p = t[0] + u1 * (e1 + u2 * (e2 + u3 * e3));
        inner += w[k] * f(p);
      }
      sum += w[i] * w[j] * u1 * u1 * u2 * inner;
    }
  }
  return abs_det(t) * sum;
}

}  // namespace scg::quadrature
