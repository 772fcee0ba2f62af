#pragma once

// Exact pre-Bloch group computations over caller-declared multiplicative
// generator groups. Wedges are taken in the wedge square tensored with Q, so
// generators of finite order contribute nothing.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scg/numeric.hpp"

namespace scg::bloch {

struct Generator {
  std::string name;
  Complex value;
  int order = 0;  // 0 for infinite order
};

class GeneratorGroup {
 public:
  explicit GeneratorGroup(std::vector<Generator> generators);

  /// {-1 (order 2), p_1, p_2, ...} named "-1", "2", "3", ...
  static std::shared_ptr<const GeneratorGroup> prime_base(const std::vector<int>& primes);
  static std::shared_ptr<const GeneratorGroup> make(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  int index_of(const std::string& name) const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
};

using GroupPtr = std::shared_ptr<const GeneratorGroup>;

class MultiplicativeElement {
 public:
  MultiplicativeElement() = default;

  /// Identity element of the group.
  static MultiplicativeElement one(GroupPtr group);
  static MultiplicativeElement generator(GroupPtr group, const std::string& name);

  /// Element from a word {name: exponent}. If `claimed` is given, its value
  /// must match the product of generator embeddings to 1e-10 (relative),
  /// otherwise inexpressible error.
  static MultiplicativeElement from_word(GroupPtr group, const std::map<std::string, std::int64_t>& word,
                                         std::optional<Complex> claimed = std::nullopt);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  Complex value() const;

  MultiplicativeElement operator*(const MultiplicativeElement& o) const;
  MultiplicativeElement inverse() const;
  MultiplicativeElement pow(std::int64_t k) const;

  /// arg(value) / pi modulo 2 in (-1, 1] when it is determined exactly by the
  /// generator data (finite-order or real generators only).
  std::optional<Rational> arg_over_pi() const;

  std::map<std::string, std::int64_t> word() const;

 private:
  MultiplicativeElement(GroupPtr g, std::vector<std::int64_t> e) : group_(std::move(g)), exps_(std::move(e)) {}
  void check_embedding() const;

  GroupPtr group_;
  std::vector<std::int64_t> exps_;
};

/// Expresses a nonzero rational over a prime-base group; throws inexpressible.
MultiplicativeElement express_rational(const GroupPtr& group, const Rational& q);

class WedgeElement {
 public:
  explicit WedgeElement(GroupPtr group = nullptr) : group_(std::move(group)) {}

  const GroupPtr& group() const { return group_; }
  /// Coefficients of g_i ^ g_j for i < j, zero entries removed.
  const std::map<std::pair<int, int>, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(int i, int j, const Rational& q);
  WedgeElement operator+(const WedgeElement& o) const;
  WedgeElement operator*(const Rational& q) const;

  std::string to_string() const;

 private:
  GroupPtr group_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

/// Bilinear expansion of a ^ b; throws mixed_group for different groups.
WedgeElement wedge(const MultiplicativeElement& a, const MultiplicativeElement& b);

struct PrePoint {
  Complex z;
  std::optional<Rational> exact;                       // set for rational points
  std::optional<MultiplicativeElement> z_word;          // z over the group
  std::optional<MultiplicativeElement> one_minus_z_word;  // 1 - z over the group
};

/// Formal Z-combination of points of the projective line minus {0, 1, inf}.
class PreBlochElement {
 public:
  /// Adds coeff * {p}; equal points (exact, or within 1e-12) are merged and
  /// zero coefficients removed.
  void add(const PrePoint& p, std::int64_t coeff);

  const std::vector<std::pair<PrePoint, std::int64_t>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// sum n_i D(z_i).
  double bloch_wigner_sum() const;

 private:
  std::vector<std::pair<PrePoint, std::int64_t>> terms_;
};

/// Sorted primes dividing a numerator or denominator of z or 1 - z over the
/// exact points of p (trial division; throws domain above 10^12).
std::vector<int> prime_support(const PreBlochElement& p);

/// sum n_i (1 - z_i) ^ z_i. Points without words are expressed exactly when
/// rational; otherwise inexpressible error naming z.
WedgeElement delta2(const PreBlochElement& p, const GroupPtr& group);

struct RationalPoint {
  Rational value;
  bool infinite = false;
};

/// sum_{i=1}^{5} (-1)^i {r(x_1, ..., x_i omitted, ..., x_5)} for complex points.
PreBlochElement five_term_relator(const std::array<ProjectivePoint, 5>& x);

/// Same with exact rational points; every cross-ratio is stored exactly.
PreBlochElement five_term_relator(const std::array<RationalPoint, 5>& x);

/// Exact cross-ratio of rational projective points.
RationalPoint cross_ratio(const RationalPoint& x1, const RationalPoint& x2, const RationalPoint& x3,
                          const RationalPoint& x4);

/// Formal sum of symbols {x}_n with integer coefficients.
struct FormalSymbolSum {
  int weight = 2;
  std::map<std::string, std::int64_t> terms;
};

/// Formal sum of {x}_{n-1} (x) x.
struct FormalTensorSum {
  int weight = 1;
  std::map<std::string, std::int64_t> terms;
};

/// delta_n: {x}_n -> {x}_{n-1} (x) x, extended linearly; n >= 2.
FormalTensorSum delta_n(const FormalSymbolSum& s);

}  // namespace scg::bloch
