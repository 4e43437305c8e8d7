#pragma once

// Kauffman bracket skein modules of the solid torus, S_q(T) = Q[x] with x the
// core curve, and of S^1 x S^2, presented as the quotient of Q[x] that kills
// A_i whenever N does not divide i + 2:
//
//   S(S^1 x S^2) = Q.empty  (+)  sum_{i >= 1, N | i+2} Q.e_i.

#include <map>
#include <vector>

#include "skein/polynomial.hpp"
#include "skein/linalg.hpp"

namespace skein {

/// p = c[0] * 1 + sum_{i>=1} c[i] * A_i. The change of basis is unitriangular.
std::vector<Rational> a_basis_expand(const Polynomial& p);
/// Inverse of a_basis_expand.
Polynomial a_basis_resum(const std::vector<Rational>& coeffs);

struct S1S2Element {
  Rational empty_coeff = 0;
  std::map<unsigned, Rational> e_coeffs;  // index i with N | i + 2; no zero entries

  bool is_zero() const { return empty_coeff == 0 && e_coeffs.empty(); }
  bool operator==(const S1S2Element&) const = default;
  std::string to_string() const;
};

/// Expands p in the A-basis, drops A_i with N not dividing i + 2 and renames
/// the survivors e_i. N must be odd.
S1S2Element s1s2_reduce(const Polynomial& p, unsigned order);

/// p -> p o T_N.
Polynomial torus_frobenius(const Polynomial& p, unsigned order);

struct FrobeniusMatrix {
  unsigned order = 0;
  unsigned kmax = 0;
  /// Row 0 is the empty link, row k is e_{kN-2}; column k is reduce(T_{kN})
  /// with T_0 read as 2 * empty.
  RationalMatrix matrix;
  /// Every reduce(T_{kN}) is supported on the row basis.
  bool closed = true;

  Rational determinant() const;
  bool invertible() const { return closed && determinant() != 0; }
};

/// N odd >= 3, kmax >= 1.
FrobeniusMatrix s1s2_frobenius_matrix(unsigned order, unsigned kmax);

struct SolidTorusFreeness {
  /// Every x^m, m <= max_degree, is reproduced from {x^j T_N^k : j < N}.
  bool spans = false;
  /// deg(x^j T_N^k) = j + kN pairwise distinct for the generators used.
  bool independent = false;
};

/// Truncated check that Q[x] is free over Q[T_N(x)] on 1, x, ..., x^{N-1}.
SolidTorusFreeness solid_torus_freeness(unsigned order, unsigned max_degree);

}  // namespace skein
