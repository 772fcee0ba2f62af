#pragma once

// Integer relation detection (PSLQ, Ferguson-Bailey) and greedy rational
// bases built on top of it.

#include <cstdint>
#include <optional>
#include <vector>

#include "scg/numeric.hpp"

namespace scg::pslq {

struct Options {
  double tolerance = 1e-11;  // relative residual accepted as a relation
  std::int64_t max_coeff = 10;
  int max_iterations = 2000;
};

/// Integer vector c != 0 with |sum c_i x_i| <= tolerance * max|x_i| and
/// max|c_i| <= max_coeff, or nullopt if none was found.
template <class Real>
std::optional<std::vector<std::int64_t>> find_relation(const std::vector<Real>& x, const Options& opt = {});

/// Incremental Q-basis of a set of reals. Each added value is either
/// expressed as a rational combination of the current basis or appended.
class RationalBasis {
 public:
  explicit RationalBasis(Options opt = {}) : opt_(opt) {}

  /// Seeds the basis with a value, returns its index.
  std::size_t seed(double value);

  /// Rational coordinates of `value` in the (possibly grown) basis.
  std::vector<Rational> coordinates(double value);

  const std::vector<double>& basis() const { return basis_; }

 private:
  Options opt_;
  std::vector<double> basis_;
};

}  // namespace scg::pslq
