#pragma once

// Small exact linear algebra over Z, Q and F_2. Matrices here are tiny
// (dimension ~ number of triangulation edges), so everything is dense.

#include <optional>
#include <stdexcept>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

using IntVector = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}
  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j].
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
BigInt determinant(const IntMatrix& m);

/// Inverse over Q; nullopt when singular.
std::optional<RationalMatrix> rational_inverse(const IntMatrix& m);
/// Inverse over Z; nullopt when singular or when the inverse is not integral.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

/// Basis of the null space of `rows` over F_2 (entries read mod 2).
std::vector<std::vector<int>> kernel_mod2(const std::vector<std::vector<int>>& rows, std::size_t cols);
/// Rank over F_2.
std::size_t rank_mod2(const std::vector<std::vector<int>>& rows, std::size_t cols);

/// Echelon basis (returned as columns of a dim x rank matrix) of the Z-span of `generators`.
IntMatrix lattice_basis(const std::vector<IntVector>& generators, std::size_t dim);

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Extends `vectors` (elements of the full-rank lattice with basis columns
/// `basis`) to a basis of that lattice. The first vectors.size() columns of
/// the result are exactly `vectors`. Throws LatticeError when the vectors do
/// not span a saturated sublattice.
IntMatrix complete_to_basis(const IntMatrix& basis, const std::vector<IntVector>& vectors);

}  // namespace skein
