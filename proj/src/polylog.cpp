#include "scg/polylog.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "scg/hypgeom.hpp"

namespace scg::polylog {

namespace {

template <class Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return q.convert_to<double>();
  } else {
    return Real(numerator(q)) / Real(denominator(q));
  }
}

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
void check_precision(const Precision& prec) {
  if (!(prec.target_rel_error > 0) || prec.max_terms <= 0) {
    throw Error(ErrorKind::precision, "precision budget must be positive");
  }
  Real eps = std::numeric_limits<Real>::epsilon();
  if (Real(prec.target_rel_error) < eps) {
    throw Error(ErrorKind::precision, "target error below machine epsilon");
  }
}

template <class C>
bool is_real(const C& z) {
  return imag(z) == 0;
}

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1), Rational(-1, 2)};

template <class Real>
Real bernoulli_real(int k) {
  return to_real<Real>(bernoulli(k));
}

/// sum_{k>=1} z^k / k^n for |z| <= 1/2.
template <class C>
C direct_series(int n, const C& z, const Precision& prec) {
  using Real = RealOf<C>;
  using std::abs;
  using std::pow;
  Real r = abs(z);
  if (r == 0) return C(0);
  Real tail_factor = r / (1 - r);
  Real tol(prec.target_rel_error);
  C power = z;
  C sum = z;
  for (int k = 2; k <= prec.max_terms; ++k) {
    power *= z;
    C term = power / pow(Real(k), n);
    sum += term;
    if (abs(term) * tail_factor <= tol * abs(sum)) return sum;
  }
  throw Error(ErrorKind::precision, "direct series did not converge within the term budget");
}

/// Expansion in mu = log z, valid for |mu| < 2 pi and z not on [1, inf).
template <class C>
C log_series(int n, const C& z, const Precision& prec) {
  using Real = RealOf<C>;
  using std::abs;
  using std::log;
  C mu = log(z);
  Real tol(prec.target_rel_error);

  Real harmonic = 0;
  for (int j = 1; j <= n - 1; ++j) harmonic += Real(1) / Real(j);

  C sum(0);
  C power(1);  // mu^k / k!
  int small_run = 0;
  for (int k = 0; k <= prec.max_terms; ++k) {
    if (k > 0) power *= mu / Real(k);
    C term(0);
    if (k == n - 1) {
      term = power * (C(harmonic) - log(-mu));
    } else if (k < n - 1) {
      term = power * zeta<Real>(n - k);
    } else {
      int m = k - n;  // zeta(-m) = (-1)^m B_{m+1} / (m + 1)
      Real zm = bernoulli_real<Real>(m + 1) / Real(m + 1);
      if (m % 2 == 1) zm = -zm;
      term = power * zm;
    }
    sum += term;
    if (k >= n) {
      small_run = abs(term) <= tol * abs(sum) ? small_run + 1 : 0;
      if (small_run >= 2) return sum;
    }
  }
  throw Error(ErrorKind::precision, "log series did not converge within the term budget");
}

template <class C>
C bernoulli_polynomial(int n, const C& x) {
  using Real = RealOf<C>;
  C result(0);
  BigInt binom = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    Rational bk = bernoulli(k);
    if (bk == 0) continue;
    C xp(1);
    for (int j = 0; j < n - k; ++j) xp *= x;
    result += xp * to_real<Real>(Rational(binom) * bk);
  }
  return result;
}

template <class C>
C factorial_c(int n) {
  C f(1);
  for (int j = 2; j <= n; ++j) f *= RealOf<C>(j);
  return f;
}

/// (2 pi i)^n / n! * B_n(x).
template <class C>
C inversion_term(int n, const C& x) {
  using Real = RealOf<C>;
  C two_pi_i(Real(0), 2 * pi<Real>());
  C p(1);
  for (int j = 0; j < n; ++j) p *= two_pi_i;
  return p / factorial_c<C>(n) * bernoulli_polynomial(n, x);
}

/// Li_n off the real ray [1, inf).
template <class C>
C li_offcut(int n, const C& z, const Precision& prec) {
  using Real = RealOf<C>;
  using std::abs;
  using std::log;
  Real r = abs(z);
  if (r <= Real(0.5)) return direct_series(n, z, prec);
  if (r >= 2) {
    C two_pi_i(Real(0), 2 * pi<Real>());
    C inv = li_offcut(n, C(1) / z, prec);
    C sign_inv = (n % 2 == 0) ? -inv : inv;
    return sign_inv - inversion_term(n, C(Real(0.5)) + log(-z) / two_pi_i);
  }
  if (n == 2 && abs(C(1) - z) <= Real(0.5)) {
    return C(pi<Real>() * pi<Real>() / 6) - log(z) * log(C(1) - z) - direct_series(2, C(1) - z, prec);
  }
  return log_series(n, z, prec);
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0) throw Error(ErrorKind::domain, "Bernoulli index must be nonnegative");
  if (k > 1 && k % 2 == 1) return Rational(0);
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  while (static_cast<int>(bernoulli_cache.size()) <= k) {
    int m = static_cast<int>(bernoulli_cache.size());
    if (m % 2 == 1) {
      bernoulli_cache.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    BigInt binom = 1;  // C(m + 1, j)
    for (int j = 0; j < m; ++j) {
      if (j > 0) binom = binom * (m + 2 - j) / j;
      if (bernoulli_cache[j] != 0) acc += Rational(binom) * bernoulli_cache[j];
    }
    bernoulli_cache.push_back(-acc / (m + 1));
  }
  return bernoulli_cache[k];
}

template <class Real>
Real zeta(int s) {
  using std::pow;
  if (s < 2) throw Error(ErrorKind::domain, "zeta is evaluated at integers s >= 2 only");
  const int n = std::is_same_v<Real, double> ? 26 : 76;
  std::vector<Real> d(n + 1);
  Real term = Real(1) / Real(n);
  Real acc = term;
  d[0] = Real(n) * acc;
  for (int i = 1; i <= n; ++i) {
    term *= Real(4) * Real(n + i - 1) * Real(n - i + 1) / (Real(2 * i) * Real(2 * i - 1));
    acc += term;
    d[i] = Real(n) * acc;
  }
  Real sum = 0;
  for (int k = 0; k < n; ++k) {
    Real t = (d[k] - d[n]) / pow(Real(k + 1), s);
    sum += (k % 2 == 0) ? t : -t;
  }
  Real eta = -sum / d[n];
  return eta / (1 - pow(Real(2), 1 - s));
}

template <class C>
C li(int n, const C& z, const Precision& prec) {
  using Real = RealOf<C>;
  using std::log;
  using std::pow;
  check_precision<Real>(prec);
  if (n < 1) throw Error(ErrorKind::domain, "polylogarithm order must be >= 1");
  bool real_arg = is_real(z);
  Real x = real(z);
  if (n == 1) {
    if (real_arg && x == 1) throw Error(ErrorKind::domain, "Li_1 has a pole at z = 1");
    if (real_arg && x > 1) return C(-log(x - 1), -pi<Real>());
    C v = -log(C(1) - z);
    return real_arg ? C(real(v), Real(0)) : v;
  }
  if (!real_arg) return li_offcut(n, z, prec);
  if (x == 1) return C(zeta<Real>(n), Real(0));
  if (x < 1) return C(real(li_offcut(n, C(x, Real(0)), prec)), Real(0));

  // Real x > 1: take the boundary value from below the cut. The real part
  // follows from the inversion identity with 1/x in (0, 1).
  Real lx = log(x);
  C inv = li_offcut(n, C(1 / x, Real(0)), prec);
  C sign_inv = (n % 2 == 0) ? -inv : inv;
  C two_pi_i(Real(0), 2 * pi<Real>());
  C v = sign_inv - inversion_term(n, C(lx) / two_pi_i);
  Real im = -pi<Real>() * pow(lx, n - 1) / real(factorial_c<C>(n - 1));
  return C(real(v), im);
}

template <class C>
RealOf<C> bloch_wigner(const C& z, const Precision& prec) {
  using Real = RealOf<C>;
  using std::abs;
  using std::arg;
  using std::log;
  if (z == C(0) || z == C(1)) return Real(0);
  if (abs(z) > 1) return -bloch_wigner(C(1) / z, prec);
  return imag(li(2, z, prec)) + arg(C(1) - z) * log(abs(z));
}

double bloch_wigner(const ProjectivePoint& p) {
  if (p.infinite) return 0.0;
  return bloch_wigner(p.value);
}

template <class C>
RealOf<C> sv_l3(const C& z, const Precision& prec) {
  using Real = RealOf<C>;
  using std::abs;
  using std::log;
  if (z == C(0)) return Real(0);
  if (z == C(1)) return zeta<Real>(3);
  Real l = log(abs(z));
  C v = li(3, z, prec) - l * li(2, z, prec) + (l * l / 3) * li(1, z, prec);
  return real(v);
}

template <class C>
RealOf<C> sv_ln(int n, const C& z, const Precision& prec) {
  using Real = RealOf<C>;
  using std::abs;
  using std::log;
  if (n < 2) throw Error(ErrorKind::domain, "sv_ln needs n >= 2");
  if (z == C(0)) return Real(0);
  if (z == C(1)) return n % 2 == 1 ? zeta<Real>(n) : Real(0);
  Real l = log(abs(z));
  C sum(0);
  Real weight = 1;  // 2^k l^k / k!
  for (int k = 0; k <= n - 1; ++k) {
    if (k > 0) weight *= 2 * l / Real(k);
    Rational bk = bernoulli(k);
    if (bk == 0) continue;
    sum += li(n - k, z, prec) * (to_real<Real>(bk) * weight);
  }
  return n % 2 == 1 ? real(sum) : imag(sum);
}

double lobachevsky(double theta) { return 0.5 * bloch_wigner(std::polar(1.0, 2.0 * theta)); }

double five_term_defect(const std::array<ProjectivePoint, 5>& points) {
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    std::array<ProjectivePoint, 4> rest;
    int m = 0;
    for (int j = 0; j < 5; ++j) {
      if (j != i) rest[m++] = points[j];
    }
    ProjectivePoint r = hypgeom::cross_ratio(rest[0], rest[1], rest[2], rest[3]);
    if (r.infinite || r.value == Complex(0.0) || r.value == Complex(1.0)) {
      throw Error(ErrorKind::degenerate, "five-term configuration has a degenerate cross-ratio");
    }
    double d = bloch_wigner(r.value);
    sum += (i % 2 == 0) ? d : -d;
  }
  return std::abs(sum);
}

template Complex li<Complex>(int, const Complex&, const Precision&);
template ExtComplex li<ExtComplex>(int, const ExtComplex&, const Precision&);
template double zeta<double>(int);
template ExtReal zeta<ExtReal>(int);
template double bloch_wigner<Complex>(const Complex&, const Precision&);
template ExtReal bloch_wigner<ExtComplex>(const ExtComplex&, const Precision&);
template double sv_l3<Complex>(const Complex&, const Precision&);
template ExtReal sv_l3<ExtComplex>(const ExtComplex&, const Precision&);
template double sv_ln<Complex>(int, const Complex&, const Precision&);
template ExtReal sv_ln<ExtComplex>(int, const ExtComplex&, const Precision&);

}  // namespace scg::polylog
