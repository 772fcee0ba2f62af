#pragma once

// Shared scalar types and the error type used across all modules.

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace scg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Working-precision complex value (IEEE double, ~16 significant digits).
using Complex = std::complex<double>;

/// Extended precision (50 decimal digits), used for oracle-grade evaluations.
using ExtReal = boost::multiprecision::cpp_bin_float_50;
using ExtComplex = boost::multiprecision::cpp_complex_50;

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using ExtVec3 = std::array<ExtReal, 3>;

enum class ErrorKind {
  domain,
  precision,
  degenerate,
  missing_horoball,
  inexpressible,
  mixed_group,
  tangency,
  flat_simplex,
  convergence,
  non_real,
  not_exact,
  malformed_input,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Convergence budget for series evaluations.
struct Precision {
  double target_rel_error = 1e-16;
  int max_terms = 2000;
};

/// Default budget for extended-precision evaluations (~50 digits).
Precision extended_precision();

// Rational helpers ------------------------------------------------------------

/// Parses "p", "p/q" or a plain decimal such as "-0.125" exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double x);

// Small vector helpers --------------------------------------------------------

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

double norm(const Vec3& a);

/// Complex projective line point; `infinite` overrides `value`.
struct ProjectivePoint {
  Complex value{};
  bool infinite = false;

  static ProjectivePoint at_infinity() { return {Complex{}, true}; }
  ProjectivePoint() = default;
  ProjectivePoint(Complex z) : value(z) {}  // NOLINT: implicit from finite values
  ProjectivePoint(double x) : value(x, 0.0) {}  // NOLINT
  ProjectivePoint(Complex z, bool inf) : value(z), infinite(inf) {}
};

}  // namespace scg
