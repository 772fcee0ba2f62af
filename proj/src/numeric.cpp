#include "scg/numeric.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace scg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::precision: return "precision error";
    case ErrorKind::degenerate: return "degenerate configuration";
    case ErrorKind::missing_horoball: return "missing horoball";
    case ErrorKind::inexpressible: return "inexpressible element";
    case ErrorKind::mixed_group: return "mixed generator groups";
    case ErrorKind::tangency: return "tangency/incidence";
    case ErrorKind::flat_simplex: return "flat simplex";
    case ErrorKind::convergence: return "convergence failure";
    case ErrorKind::non_real: return "non-real period";
    case ErrorKind::not_exact: return "inexact term in exact mode";
    case ErrorKind::malformed_input: return "malformed input";
  }
  return "error";
}

Precision extended_precision() { return Precision{1e-50, 20000}; }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw Error(ErrorKind::malformed_input, "empty rational");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorKind::malformed_input, "zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
      std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
      if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
      BigInt num(digits);
      BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(s.size() - dot_pos - 1));
      return Rational(num, den);
    }
    return Rational(BigInt(s));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::malformed_input, "cannot parse rational '" + s + "'");
  }
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, "non-finite value has no rational form");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 bits of mantissa are exact as an integer.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r(scaled);
  if (exponent > 0) {
    r *= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(exponent)));
  } else if (exponent < 0) {
    r /= Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(-exponent)));
  }
  return r;
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

}  // namespace scg
