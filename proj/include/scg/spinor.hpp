#pragma once

// Spin representation of so(2n) on the exterior algebra of xi_1..xi_n, the
// supertrace, and the Pfaffian identity, all in exact rationals.
//
// In the split basis an element of so(2n) is X = [[A, B], [C, -A^t]] with B
// and C skew. It acts by
//   -1/2 tr A + sum a_ij xi_i d_j + sum_{i<j} (b_ij xi_i xi_j + c_ij d_i d_j).
// Basis vectors are subsets S of {0..n-1} encoded as bitmasks; xi_i wedges
// from the left with sign (-1)^#{j in S : j < i} and d_i is the matching
// left contraction.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "scg/numeric.hpp"

namespace scg::spinor {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b, const Rational& scale = 1);
Matrix transpose(const Matrix& a);
Matrix commutator(const Matrix& a, const Matrix& b);
Rational trace(const Matrix& a);

/// Exact determinant by fraction-exact Gaussian elimination.
Rational determinant(const Matrix& a);

/// Pfaffian of a skew-symmetric matrix of even size (standard convention,
/// Pf([[0, a], [-a, 0]]) = a) by expansion along the first row. Throws domain
/// for non-square, odd or non-skew input.
Rational pfaffian(const Matrix& a);

struct SplitSoElement {
  int n = 0;
  Matrix a;
  Matrix b;
  Matrix c;

  /// Throws domain unless the blocks are n x n and B, C are skew.
  void validate() const;
  /// The 2n x 2n matrix [[A, B], [C, -A^t]].
  Matrix matrix() const;
  static SplitSoElement from_matrix(const Matrix& x);
  static SplitSoElement cartan(const std::vector<Rational>& t);
};

SplitSoElement bracket(const SplitSoElement& x, const SplitSoElement& y);

/// Exact operator on the 2^n-dimensional exterior algebra.
struct SuperOperator {
  int n = 0;
  Matrix m;

  static SuperOperator identity(int n);
  /// +1 on even subsets, -1 on odd subsets.
  static SuperOperator parity(int n);

  SuperOperator operator*(const SuperOperator& o) const;
  SuperOperator operator-(const SuperOperator& o) const;
  SuperOperator pow(int k) const;
  bool operator==(const SuperOperator& o) const { return n == o.n && m == o.m; }
};

/// Left multiplication by xi_i and left contraction d_i.
SuperOperator wedge_operator(int n, int i);
SuperOperator contraction_operator(int n, int i);

SuperOperator spin_rep(const SplitSoElement& x);

/// Trace on even subsets minus trace on odd subsets.
Rational supertrace(const SuperOperator& op);

/// Pfaffian normalized so that the Cartan element diag(t, -t) gives
/// t_1 ... t_n: (-1)^{n(n+1)/2} Pf(J X) with J = [[0, I], [I, 0]].
Rational pf_split(const SplitSoElement& x);

struct PfIdentity {
  Rational lhs;    // Str(spin_rep(X)^n)
  Rational rhs;    // n! Pf_split(X)
  Rational ratio;  // lhs / rhs
};

/// Throws degenerate ("indeterminate sample") when rhs = 0.
PfIdentity pf_identity_check(const SplitSoElement& x);

/// Random rational in {p/q : |p| <= 5, 1 <= q <= 4}.
Rational random_rational(std::mt19937_64& rng);
/// Random element with small rational entries.
SplitSoElement random_element(int n, std::mt19937_64& rng);
/// Random skew-symmetric matrix with small rational entries.
Matrix random_skew(std::size_t size, std::mt19937_64& rng);

}  // namespace scg::spinor
