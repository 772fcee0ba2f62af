#include "scg/spinor.hpp"

#include <bit>

namespace scg::spinor {

namespace {

void require_square(const Matrix& a, const char* what) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw Error(ErrorKind::domain, std::string(what) + " must be square");
  }
}

bool is_skew(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i][j] != -a[j][i]) return false;
    }
  }
  return true;
}

Rational pfaffian_rec(const Matrix& a) {
  const std::size_t m = a.size();
  if (m == 0) return 1;
  Rational sum = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < m; ++k) {
      if (k != j) keep.push_back(k);
    }
    Matrix minor = zero_matrix(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r) {
      for (std::size_t c = 0; c < keep.size(); ++c) minor[r][c] = a[keep[r]][keep[c]];
    }
    Rational term = a[0][j] * pfaffian_rec(minor);
    if (j % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Rational>(cols)); }

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix out = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b, const Rational& scale) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += scale * b[i][j];
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix out = zero_matrix(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return add(multiply(a, b), multiply(b, a), -1); }

Rational trace(const Matrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Rational determinant(const Matrix& a) {
  require_square(a, "matrix");
  Matrix m = a;
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rational pfaffian(const Matrix& a) {
  require_square(a, "matrix");
  if (a.size() % 2 != 0) throw Error(ErrorKind::domain, "Pfaffian needs an even-dimensional matrix");
  if (!is_skew(a)) throw Error(ErrorKind::domain, "Pfaffian needs a skew-symmetric matrix");
  return pfaffian_rec(a);
}

void SplitSoElement::validate() const {
  auto check = [&](const Matrix& m, const char* name) {
    if (m.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::domain, std::string(name) + " must be n x n");
    for (const auto& row : m) {
      if (row.size() != static_cast<std::size_t>(n)) throw Error(ErrorKind::domain, std::string(name) + " must be n x n");
    }
  };
  if (n < 1) throw Error(ErrorKind::domain, "n must be positive");
  check(a, "A");
  check(b, "B");
  check(c, "C");
  if (!is_skew(b)) throw Error(ErrorKind::domain, "B must be skew-symmetric");
  if (!is_skew(c)) throw Error(ErrorKind::domain, "C must be skew-symmetric");
}

Matrix SplitSoElement::matrix() const {
  validate();
  const std::size_t k = static_cast<std::size_t>(n);
  Matrix x = zero_matrix(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      x[i][j] = a[i][j];
      x[i][k + j] = b[i][j];
      x[k + i][j] = c[i][j];
      x[k + i][k + j] = -a[j][i];
    }
  }
  return x;
}

SplitSoElement SplitSoElement::from_matrix(const Matrix& x) {
  require_square(x, "matrix");
  if (x.size() % 2 != 0 || x.empty()) throw Error(ErrorKind::domain, "split element needs size 2n");
  const std::size_t k = x.size() / 2;
  SplitSoElement e;
  e.n = static_cast<int>(k);
  e.a = zero_matrix(k, k);
  e.b = zero_matrix(k, k);
  e.c = zero_matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      e.a[i][j] = x[i][j];
      e.b[i][j] = x[i][k + j];
      e.c[i][j] = x[k + i][j];
      if (x[k + i][k + j] != -x[j][i]) throw Error(ErrorKind::domain, "matrix is not in so(2n) (split form)");
    }
  }
  e.validate();
  return e;
}

SplitSoElement SplitSoElement::cartan(const std::vector<Rational>& t) {
  SplitSoElement e;
  e.n = static_cast<int>(t.size());
  e.a = zero_matrix(t.size(), t.size());
  e.b = zero_matrix(t.size(), t.size());
  e.c = zero_matrix(t.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) e.a[i][i] = t[i];
  return e;
}

SplitSoElement bracket(const SplitSoElement& x, const SplitSoElement& y) {
  if (x.n != y.n) throw Error(ErrorKind::domain, "bracket of elements of different rank");
  return SplitSoElement::from_matrix(commutator(x.matrix(), y.matrix()));
}

SuperOperator SuperOperator::identity(int n) { return {n, identity_matrix(std::size_t{1} << n)}; }

SuperOperator SuperOperator::parity(int n) {
  SuperOperator p = identity(n);
  for (std::size_t s = 0; s < p.m.size(); ++s) {
    if (std::popcount(s) % 2 == 1) p.m[s][s] = -1;
  }
  return p;
}

SuperOperator SuperOperator::operator*(const SuperOperator& o) const { return {n, multiply(m, o.m)}; }

SuperOperator SuperOperator::operator-(const SuperOperator& o) const { return {n, add(m, o.m, -1)}; }

SuperOperator SuperOperator::pow(int k) const {
  SuperOperator r = identity(n);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

SuperOperator wedge_operator(int n, int i) {
  const std::size_t dim = std::size_t{1} << n;
  SuperOperator op{n, zero_matrix(dim, dim)};
  const std::size_t bit = std::size_t{1} << i;
  for (std::size_t s = 0; s < dim; ++s) {
    if (s & bit) continue;
    int below = std::popcount(s & (bit - 1));
    op.m[s | bit][s] = below % 2 == 0 ? 1 : -1;
  }
  return op;
}

SuperOperator contraction_operator(int n, int i) {
  const std::size_t dim = std::size_t{1} << n;
  SuperOperator op{n, zero_matrix(dim, dim)};
  const std::size_t bit = std::size_t{1} << i;
  for (std::size_t s = 0; s < dim; ++s) {
    if (!(s & bit)) continue;
    int below = std::popcount(s & (bit - 1));
    op.m[s & ~bit][s] = below % 2 == 0 ? 1 : -1;
  }
  return op;
}

SuperOperator spin_rep(const SplitSoElement& x) {
  x.validate();
  const int n = x.n;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<SuperOperator> xi;
  std::vector<SuperOperator> d;
  for (int i = 0; i < n; ++i) {
    xi.push_back(wedge_operator(n, i));
    d.push_back(contraction_operator(n, i));
  }
  Matrix m = zero_matrix(dim, dim);
  Rational shift = -trace(x.a) / 2;
  for (std::size_t s = 0; s < dim; ++s) m[s][s] = shift;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (x.a[i][j] != 0) m = add(m, (xi[i] * d[j]).m, x.a[i][j]);
      if (j > i) {
        if (x.b[i][j] != 0) m = add(m, (xi[i] * xi[j]).m, x.b[i][j]);
        if (x.c[i][j] != 0) m = add(m, (d[i] * d[j]).m, x.c[i][j]);
      }
    }
  }
  return {n, m};
}

Rational supertrace(const SuperOperator& op) {
  Rational s = 0;
  for (std::size_t k = 0; k < op.m.size(); ++k) {
    if (std::popcount(k) % 2 == 0) {
      s += op.m[k][k];
    } else {
      s -= op.m[k][k];
    }
  }
  return s;
}

Rational pf_split(const SplitSoElement& x) {
  const std::size_t k = static_cast<std::size_t>(x.n);
  Matrix j = zero_matrix(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    j[i][k + i] = 1;
    j[k + i][i] = 1;
  }
  Rational pf = pfaffian(multiply(j, x.matrix()));
  long e = static_cast<long>(k * (k + 1) / 2);
  return e % 2 == 0 ? pf : Rational(-pf);
}

PfIdentity pf_identity_check(const SplitSoElement& x) {
  x.validate();
  PfIdentity r;
  r.lhs = supertrace(spin_rep(x).pow(x.n));
  r.rhs = factorial(x.n) * pf_split(x);
  if (r.rhs == 0) throw Error(ErrorKind::degenerate, "indeterminate sample (Pfaffian vanishes)");
  r.ratio = r.lhs / r.rhs;
  return r;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  int p = num(rng);
  int q = den(rng);
  return Rational(p) / Rational(q);
}

SplitSoElement random_element(int n, std::mt19937_64& rng) {
  const std::size_t k = static_cast<std::size_t>(n);
  SplitSoElement e;
  e.n = n;
  e.a = zero_matrix(k, k);
  for (auto& row : e.a) {
    for (auto& v : row) v = random_rational(rng);
  }
  e.b = random_skew(k, rng);
  e.c = random_skew(k, rng);
  return e;
}

Matrix random_skew(std::size_t size, std::mt19937_64& rng) {
  Matrix m = zero_matrix(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      m[i][j] = random_rational(rng);
      m[j][i] = -m[i][j];
    }
  }
  return m;
}

}  // namespace scg::spinor
