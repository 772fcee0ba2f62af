#include "scg/bloch.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "scg/hypgeom.hpp"
#include "scg/polylog.hpp"

namespace scg::bloch {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

Complex int_pow(Complex base, std::int64_t e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  Complex result(1.0);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string describe(const Complex& z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

Rational reduce_mod2(Rational r) {
  // Into (-1, 1].
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt twice = 2 * den;
  BigInt m = num % twice;
  if (m < 0) m += twice;
  Rational out(m, den);
  if (out > 1) out -= 2;
  return out;
}

}  // namespace

GeneratorGroup::GeneratorGroup(std::vector<Generator> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.order < 0) throw Error(ErrorKind::malformed_input, "generator order must be >= 0");
    if (!std::isfinite(g.value.real()) || !std::isfinite(g.value.imag()) || std::abs(g.value) == 0.0) {
      throw Error(ErrorKind::malformed_input, "generator '" + g.name + "' needs a finite nonzero value");
    }
    if (g.order > 0 && std::abs(int_pow(g.value, g.order) - 1.0) > 1e-10) {
      throw Error(ErrorKind::malformed_input, "generator '" + g.name + "' is not of the declared order");
    }
    if (!index_.emplace(g.name, static_cast<int>(i)).second) {
      throw Error(ErrorKind::malformed_input, "duplicate generator name '" + g.name + "'");
    }
  }
}

std::shared_ptr<const GeneratorGroup> GeneratorGroup::make(std::vector<Generator> generators) {
  return std::make_shared<const GeneratorGroup>(std::move(generators));
}

std::shared_ptr<const GeneratorGroup> GeneratorGroup::prime_base(const std::vector<int>& primes) {
  std::vector<Generator> gens{{"-1", Complex(-1.0), 2}};
  for (int p : primes) gens.push_back({std::to_string(p), Complex(static_cast<double>(p)), 0});
  return make(std::move(gens));
}

int GeneratorGroup::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorKind::inexpressible, "unknown generator '" + name + "'");
  return it->second;
}

MultiplicativeElement MultiplicativeElement::one(GroupPtr group) {
  std::size_t n = group->size();
  return MultiplicativeElement(std::move(group), std::vector<std::int64_t>(n, 0));
}

MultiplicativeElement MultiplicativeElement::generator(GroupPtr group, const std::string& name) {
  MultiplicativeElement e = one(group);
  e.exps_[group->index_of(name)] = 1;
  return e;
}

MultiplicativeElement MultiplicativeElement::from_word(GroupPtr group, const std::map<std::string, std::int64_t>& word,
                                                       std::optional<Complex> claimed) {
  MultiplicativeElement e = one(group);
  for (const auto& [name, k] : word) e.exps_[e.group_->index_of(name)] += k;
  if (claimed) {
    Complex v = e.value();
    if (std::abs(v - *claimed) > 1e-10 * std::max(1.0, std::abs(*claimed))) {
      throw Error(ErrorKind::inexpressible,
                  "word evaluates to " + describe(v) + ", not the claimed value " + describe(*claimed));
    }
  }
  return e;
}

Complex MultiplicativeElement::value() const {
  Complex v(1.0);
  if (!group_) return v;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) v *= int_pow(group_->generators()[i].value, exps_[i]);
  }
  return v;
}

void MultiplicativeElement::check_embedding() const {
  Complex v = value();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::precision, "embedding of a group element overflowed");
  }
}

MultiplicativeElement MultiplicativeElement::operator*(const MultiplicativeElement& o) const {
  if (group_ != o.group_) throw Error(ErrorKind::mixed_group, "product of elements of different generator groups");
  MultiplicativeElement out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  Complex expected = value() * o.value();
  if (std::abs(out.value() - expected) > 1e-10 * std::max(1.0, std::abs(expected))) {
    throw Error(ErrorKind::precision, "embedding drifted after a product");
  }
  out.check_embedding();
  return out;
}

MultiplicativeElement MultiplicativeElement::inverse() const { return pow(-1); }

MultiplicativeElement MultiplicativeElement::pow(std::int64_t k) const {
  MultiplicativeElement out = *this;
  for (auto& e : out.exps_) e *= k;
  out.check_embedding();
  return out;
}

std::optional<Rational> MultiplicativeElement::arg_over_pi() const {
  Rational total = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    const Generator& g = group_->generators()[i];
    if (g.order > 0) {
      auto m = static_cast<std::int64_t>(std::llround(std::arg(g.value) * g.order / (2.0 * kPi)));
      total += Rational(2 * m * exps_[i], g.order);
    } else if (g.value.imag() == 0.0) {
      if (g.value.real() < 0) total += Rational(exps_[i]);
    } else {
      return std::nullopt;
    }
  }
  return reduce_mod2(total);
}

std::map<std::string, std::int64_t> MultiplicativeElement::word() const {
  std::map<std::string, std::int64_t> w;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) w[group_->generators()[i].name] = exps_[i];
  }
  return w;
}

MultiplicativeElement express_rational(const GroupPtr& group, const Rational& q) {
  if (q == 0) throw Error(ErrorKind::inexpressible, "zero is not a multiplicative element");
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  std::map<std::string, std::int64_t> word;
  if (num < 0) {
    num = -num;
    word["-1"] = 1;
  }
  for (const auto& g : group->generators()) {
    if (g.order != 0 || g.value.imag() != 0.0 || g.value.real() < 2.0) continue;
    double pv = g.value.real();
    if (pv != std::floor(pv) || pv > 9.0e15) continue;
    BigInt p = static_cast<std::int64_t>(pv);
    std::int64_t e = 0;
    while (num % p == 0) {
      num /= p;
      ++e;
    }
    while (den % p == 0) {
      den /= p;
      --e;
    }
    if (e != 0) word[g.name] = e;
  }
  if (num != 1 || den != 1) {
    throw Error(ErrorKind::inexpressible, to_string(q) + " does not factor over the declared generators");
  }
  return MultiplicativeElement::from_word(group, word, Complex(to_double(q)));
}

namespace {

void collect_primes(BigInt n, std::set<int>& out) {
  if (n < 0) n = -n;
  if (n > BigInt(1000000000000LL)) throw Error(ErrorKind::domain, "integer too large to factor by trial division");
  for (int p = 2; BigInt(p) * p <= n; ++p) {
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  }
  if (n > 1) out.insert(static_cast<int>(n));
}

}  // namespace

std::vector<int> prime_support(const PreBlochElement& p) {
  std::set<int> primes;
  for (const auto& [pt, n] : p.terms()) {
    if (!pt.exact) continue;
    for (const Rational& q : {*pt.exact, Rational(1 - *pt.exact)}) {
      collect_primes(numerator(q), primes);
      collect_primes(denominator(q), primes);
    }
  }
  return {primes.begin(), primes.end()};
}

void WedgeElement::add(int i, int j, const Rational& q) {
  if (i == j || q == 0) return;
  const auto& gens = group_->generators();
  if (gens[i].order > 0 || gens[j].order > 0) return;
  Rational c = q;
  if (i > j) {
    std::swap(i, j);
    c = -c;
  }
  Rational& slot = coeffs_[{i, j}];
  slot += c;
  if (slot == 0) coeffs_.erase({i, j});
}

WedgeElement WedgeElement::operator+(const WedgeElement& o) const {
  if (group_ && o.group_ && group_ != o.group_) throw Error(ErrorKind::mixed_group, "sum of wedges over different groups");
  WedgeElement out = *this;
  if (!out.group_) out.group_ = o.group_;
  for (const auto& [key, q] : o.coeffs_) out.add(key.first, key.second, q);
  return out;
}

WedgeElement WedgeElement::operator*(const Rational& q) const {
  WedgeElement out(group_);
  if (q == 0) return out;
  for (const auto& [key, c] : coeffs_) out.coeffs_[key] = c * q;
  return out;
}

std::string WedgeElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, q] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << scg::to_string(q) << "*(" << group_->generators()[key.first].name << "^"
       << group_->generators()[key.second].name << ")";
  }
  return os.str();
}

WedgeElement wedge(const MultiplicativeElement& a, const MultiplicativeElement& b) {
  if (a.group() != b.group() || !a.group()) throw Error(ErrorKind::mixed_group, "wedge of elements of different groups");
  WedgeElement w(a.group());
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] == 0) continue;
    for (std::size_t j = 0; j < eb.size(); ++j) {
      if (eb[j] == 0) continue;
      w.add(static_cast<int>(i), static_cast<int>(j), Rational(ea[i]) * eb[j]);
    }
  }
  return w;
}

void PreBlochElement::add(const PrePoint& p, std::int64_t coeff) {
  if (coeff == 0) return;
  if (p.z == Complex(0.0) || p.z == Complex(1.0) || (p.exact && (*p.exact == 0 || *p.exact == 1))) {
    throw Error(ErrorKind::degenerate, "pre-Bloch points must avoid 0, 1 and infinity");
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const PrePoint& q = it->first;
    bool same = (p.exact && q.exact) ? *p.exact == *q.exact
                                     : std::abs(p.z - q.z) <= 1e-12 * std::max(1.0, std::abs(p.z));
    if (same) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
      return;
    }
  }
  terms_.emplace_back(p, coeff);
}

double PreBlochElement::bloch_wigner_sum() const {
  double s = 0.0;
  for (const auto& [p, n] : terms_) s += static_cast<double>(n) * polylog::bloch_wigner(p.z);
  return s;
}

WedgeElement delta2(const PreBlochElement& p, const GroupPtr& group) {
  WedgeElement out(group);
  for (const auto& [pt, n] : p.terms()) {
    auto word_of = [&](const std::optional<MultiplicativeElement>& given, bool one_minus) {
      if (given) {
        if (given->group() != group) throw Error(ErrorKind::mixed_group, "point word over a different group");
        return *given;
      }
      if (pt.exact) return express_rational(group, one_minus ? Rational(1 - *pt.exact) : *pt.exact);
      throw Error(ErrorKind::inexpressible, std::string(one_minus ? "1 - z" : "z") + " for z = " + describe(pt.z) +
                                                " is not expressible over the declared generators");
    };
    MultiplicativeElement a = word_of(pt.one_minus_z_word, true);
    MultiplicativeElement b = word_of(pt.z_word, false);
    out = out + wedge(a, b) * Rational(n);
  }
  return out;
}

RationalPoint cross_ratio(const RationalPoint& x1, const RationalPoint& x2, const RationalPoint& x3,
                          const RationalPoint& x4) {
  const std::array<const RationalPoint*, 4> pts = {&x1, &x2, &x3, &x4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto& a = *pts[i];
      const auto& b = *pts[j];
      if ((a.infinite && b.infinite) || (!a.infinite && !b.infinite && a.value == b.value)) {
        throw Error(ErrorKind::degenerate, "cross-ratio of coincident points");
      }
    }
  }
  if (x1.infinite) return {(x2.value - x4.value) / (x2.value - x3.value), false};
  if (x2.infinite) return {(x1.value - x3.value) / (x1.value - x4.value), false};
  if (x3.infinite) return {(x2.value - x4.value) / (x1.value - x4.value), false};
  if (x4.infinite) return {(x1.value - x3.value) / (x2.value - x3.value), false};
  return {(x1.value - x3.value) * (x2.value - x4.value) / ((x1.value - x4.value) * (x2.value - x3.value)), false};
}

PreBlochElement five_term_relator(const std::array<ProjectivePoint, 5>& x) {
  PreBlochElement out;
  for (int i = 0; i < 5; ++i) {
    std::array<ProjectivePoint, 4> rest;
    int m = 0;
    for (int j = 0; j < 5; ++j) {
      if (j != i) rest[m++] = x[j];
    }
    ProjectivePoint r = hypgeom::cross_ratio(rest[0], rest[1], rest[2], rest[3]);
    if (r.infinite || r.value == Complex(0.0) || r.value == Complex(1.0)) {
      throw Error(ErrorKind::degenerate, "five-term configuration has a degenerate cross-ratio");
    }
    out.add(PrePoint{r.value, std::nullopt, std::nullopt, std::nullopt}, (i % 2 == 0) ? -1 : 1);
  }
  return out;
}

PreBlochElement five_term_relator(const std::array<RationalPoint, 5>& x) {
  PreBlochElement out;
  for (int i = 0; i < 5; ++i) {
    std::array<RationalPoint, 4> rest;
    int m = 0;
    for (int j = 0; j < 5; ++j) {
      if (j != i) rest[m++] = x[j];
    }
    RationalPoint r = cross_ratio(rest[0], rest[1], rest[2], rest[3]);
    if (r.value == 0 || r.value == 1) throw Error(ErrorKind::degenerate, "five-term configuration is degenerate");
    out.add(PrePoint{Complex(to_double(r.value)), r.value, std::nullopt, std::nullopt}, (i % 2 == 0) ? -1 : 1);
  }
  return out;
}

FormalTensorSum delta_n(const FormalSymbolSum& s) {
  if (s.weight < 2) throw Error(ErrorKind::domain, "delta_n needs n >= 2");
  FormalTensorSum out;
  out.weight = s.weight - 1;
  for (const auto& [x, n] : s.terms) {
    if (n != 0) out.terms[x] += n;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace scg::bloch
