#include "skein/linalg.hpp"

#include <string>
#include <utility>

namespace skein {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMatrix*vector: shape mismatch");
  IntVector out(rows_, BigInt(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

// ---------------------------------------------------------------------------

Rational determinant(RationalMatrix m) {
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
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  const Rational d = determinant(std::move(r));
  return d.get_num();
}

std::optional<RationalMatrix> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  RationalMatrix a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  auto inv = rational_inverse(m);
  if (!inv) return std::nullopt;
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = (*inv)[i][j];
      if (x.get_den() != 1) return std::nullopt;
      out(i, j) = x.get_num();
    }
  return out;
}

namespace {

// Row-reduces over F_2 in place; returns pivot columns.
std::vector<std::size_t> echelon_mod2(std::vector<std::vector<int>>& a, std::size_t cols) {
  for (auto& row : a)
    for (auto& x : row) x = ((x % 2) + 2) % 2;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r && a[i][c]) {
        for (std::size_t k = 0; k < cols; ++k) a[i][k] ^= a[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<int>> kernel_mod2(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  auto a = rows;
  const auto pivots = echelon_mod2(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod2(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  auto a = rows;
  return echelon_mod2(a, cols).size();
}

namespace {

// Integer row reduction of column `col` over rows [start, rows): afterwards
// a(start, col) = gcd >= 0 and entries below are zero. Every row operation is
// mirrored onto `track` when given.
void euclid_column(IntMatrix& a, std::size_t start, std::size_t col, IntMatrix* track) {
  for (;;) {
    std::size_t best = a.rows();
    for (std::size_t r = start; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      if (best == a.rows() || abs(a(r, col)) < abs(a(best, col))) best = r;
    }
    if (best == a.rows()) return;
    a.swap_rows(start, best);
    if (track) track->swap_rows(start, best);
    bool done = true;
    for (std::size_t r = start + 1; r < a.rows(); ++r) {
      if (a(r, col) == 0) continue;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a(r, col).get_mpz_t(), a(start, col).get_mpz_t());
      a.add_row_multiple(r, start, -q);
      if (track) track->add_row_multiple(r, start, -q);
      if (a(r, col) != 0) done = false;
    }
    if (done) break;
  }
  if (a(start, col) < 0) {
    a.negate_row(start);
    if (track) track->negate_row(start);
  }
}

}  // namespace

IntMatrix lattice_basis(const std::vector<IntVector>& generators, std::size_t dim) {
  IntMatrix g(generators.size(), dim);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    if (generators[r].size() != dim) throw std::invalid_argument("lattice_basis: length mismatch");
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = generators[r][c];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < g.rows(); ++c) {
    euclid_column(g, rank, c, nullptr);
    if (g(rank, c) != 0) ++rank;
  }
  IntMatrix basis(dim, rank);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < dim; ++c) basis(c, r) = g(r, c);
  return basis;
}

IntMatrix complete_to_basis(const IntMatrix& basis, const std::vector<IntVector>& vectors) {
  const std::size_t n = basis.rows();
  if (basis.cols() != n) throw LatticeError("complete_to_basis: lattice basis is not full rank");
  const std::size_t p = vectors.size();
  if (p > n) throw LatticeError("complete_to_basis: more vectors than the lattice rank");

  const auto binv = rational_inverse(basis);
  if (!binv) throw LatticeError("complete_to_basis: singular lattice basis");

  // Coordinates of the vectors in the lattice basis.
  IntMatrix coords(n, p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += (*binv)[i][k] * vectors[j][k];
      if (acc.get_den() != 1) {
        throw LatticeError("complete_to_basis: vector " + std::to_string(j) + " is not in the lattice");
      }
      coords(i, j) = acc.get_num();
    }
  }

  // U * coords = [R; 0] with R upper triangular.
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t j = 0; j < p; ++j) {
    euclid_column(coords, j, j, &u);
    if (coords(j, j) != 1) {
      throw LatticeError("complete_to_basis: vectors do not extend to a lattice basis (pivot " +
                         coords(j, j).get_str() + " in column " + std::to_string(j) + ")");
    }
  }

  // V^{-1} = U^{-1} diag(R, I); its first p columns are the input coordinates.
  auto uinv = integer_inverse(u);
  if (!uinv) throw LatticeError("complete_to_basis: row transform is not unimodular");
  IntMatrix block = IntMatrix::identity(n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) block(i, j) = coords(i, j);
  IntMatrix result = basis * (*uinv * block);

  for (std::size_t j = 0; j < p; ++j) {
    if (result.column(j) != vectors[j]) throw LatticeError("complete_to_basis: internal consistency failure");
  }
  return result;
}

}  // namespace skein
