#include "scg/pslq.hpp"

#include <cmath>

namespace scg::pslq {

namespace {

template <class Real>
Real round_half_away(const Real& v) {
  using std::floor;
  return v >= 0 ? Real(floor(v + Real(0.5))) : Real(-floor(-v + Real(0.5)));
}

}  // namespace

template <class Real>
std::optional<std::vector<std::int64_t>> find_relation(const std::vector<Real>& x, const Options& opt) {
  using std::abs;
  using std::pow;
  using std::sqrt;
  const int n = static_cast<int>(x.size());
  if (n < 2) throw Error(ErrorKind::domain, "relation search needs at least two values");

  Real scale = 0;
  for (const auto& v : x) scale = std::max(scale, Real(abs(v)));
  if (scale == 0) throw Error(ErrorKind::domain, "relation search on an all-zero vector");
  const Real tol = Real(opt.tolerance) * scale;
  for (int i = 0; i < n; ++i) {
    if (abs(x[i]) <= tol) {
      std::vector<std::int64_t> rel(n, 0);
      rel[i] = 1;
      return rel;
    }
  }

  // 1-indexed working arrays, as in the published algorithm.
  std::vector<Real> s(n + 2, Real(0));
  std::vector<Real> y(n + 1, Real(0));
  std::vector<std::vector<Real>> H(n + 2, std::vector<Real>(n + 2, Real(0)));
  std::vector<std::vector<Real>> B(n + 1, std::vector<Real>(n + 1, Real(0)));
  for (int i = 1; i <= n; ++i) B[i][i] = 1;

  for (int k = 1; k <= n; ++k) {
    Real t = 0;
    for (int j = k; j <= n; ++j) t += x[j - 1] * x[j - 1];
    s[k] = sqrt(t);
  }
  Real t0 = s[1];
  for (int k = 1; k <= n; ++k) {
    y[k] = x[k - 1] / t0;
    s[k] = s[k] / t0;
  }
  for (int i = 1; i <= n; ++i) {
    if (i <= n - 1) H[i][i] = s[i] != 0 ? Real(s[i + 1] / s[i]) : Real(0);
    for (int j = 1; j < i; ++j) {
      Real sjj = s[j] * s[j + 1];
      H[i][j] = sjj != 0 ? Real(-y[i] * y[j] / sjj) : Real(0);
    }
  }

  auto reduce_row = [&](int i, int j) -> bool {
    if (H[j][j] == 0) return false;
    Real t = round_half_away(Real(H[i][j] / H[j][j]));
    if (t == 0) return true;
    y[j] += t * y[i];
    for (int k = 1; k <= j; ++k) H[i][k] -= t * H[j][k];
    for (int k = 1; k <= n; ++k) B[k][j] += t * B[k][i];
    return true;
  };

  for (int i = 2; i <= n; ++i) {
    for (int j = i - 1; j >= 1; --j) reduce_row(i, j);
  }

  const Real gamma = sqrt(Real(4) / Real(3));
  const Real max_coeff(static_cast<double>(opt.max_coeff));
  for (int rep = 0; rep < opt.max_iterations; ++rep) {
    int m = -1;
    Real best = -1;
    Real gpow = 1;
    for (int i = 1; i < n; ++i) {
      gpow *= gamma;
      Real sz = gpow * abs(H[i][i]);
      if (sz > best) {
        best = sz;
        m = i;
      }
    }
    std::swap(y[m], y[m + 1]);
    std::swap(H[m], H[m + 1]);
    for (int k = 1; k <= n; ++k) std::swap(B[k][m], B[k][m + 1]);

    if (m <= n - 2) {
      Real r = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      if (r == 0) break;
      Real c1 = H[m][m] / r;
      Real c2 = H[m][m + 1] / r;
      for (int i = m; i <= n; ++i) {
        Real a = H[i][m];
        Real b = H[i][m + 1];
        H[i][m] = c1 * a + c2 * b;
        H[i][m + 1] = -c2 * a + c1 * b;
      }
    }
    for (int i = m + 1; i <= n; ++i) {
      for (int j = std::min(i - 1, m + 1); j >= 1; --j) {
        if (!reduce_row(i, j)) break;
      }
    }

    for (int i = 1; i <= n; ++i) {
      std::vector<std::int64_t> rel(n);
      bool ok = true;
      Real residual = 0;
      for (int j = 1; j <= n; ++j) {
        Real c = round_half_away(B[j][i]);
        if (abs(c) > max_coeff) {
          ok = false;
          break;
        }
        rel[j - 1] = static_cast<std::int64_t>(static_cast<double>(c));
        residual += c * x[j - 1];
      }
      if (!ok) continue;
      bool nonzero = false;
      for (auto c : rel) nonzero = nonzero || c != 0;
      if (nonzero && abs(residual) <= tol) return rel;
    }

    Real hmax = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) hmax = std::max(hmax, Real(abs(H[i][j])));
    }
    if (hmax > 0 && Real(1) / hmax > max_coeff * 100) break;
  }
  return std::nullopt;
}

template std::optional<std::vector<std::int64_t>> find_relation<double>(const std::vector<double>&, const Options&);
template std::optional<std::vector<std::int64_t>> find_relation<ExtReal>(const std::vector<ExtReal>&, const Options&);

std::size_t RationalBasis::seed(double value) {
  basis_.push_back(value);
  return basis_.size() - 1;
}

std::vector<Rational> RationalBasis::coordinates(double value) {
  double scale = std::abs(value);
  for (double b : basis_) scale = std::max(scale, std::abs(b));
  if (std::abs(value) <= opt_.tolerance * std::max(scale, 1.0)) return std::vector<Rational>(basis_.size(), Rational(0));
  if (!basis_.empty()) {
    std::vector<ExtReal> x;
    for (double b : basis_) x.emplace_back(b);
    x.emplace_back(value);
    auto rel = find_relation<ExtReal>(x, opt_);
    if (rel && rel->back() != 0) {
      std::vector<Rational> coords(basis_.size());
      for (std::size_t k = 0; k < basis_.size(); ++k) coords[k] = Rational(-(*rel)[k]) / Rational(rel->back());
      return coords;
    }
  }
  basis_.push_back(value);
  std::vector<Rational> coords(basis_.size(), Rational(0));
  coords.back() = 1;
  return coords;
}

}  // namespace scg::pslq
