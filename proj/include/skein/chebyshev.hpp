#pragma once

// Chebyshev polynomials in the skein-theoretic normalization.
//
// All three families satisfy Q_n = x Q_{n-1} - Q_{n-2}:
//   T: T_0 = 2, T_1 = x      (first kind)
//   S: S_0 = 1, S_1 = x      (second kind)
//   A: A_1 = S_1, A_2 = S_2, A_n = S_n + A_{n-2}

#include <vector>

#include "skein/polynomial.hpp"

namespace skein {

Polynomial chebyshev_T(unsigned n);
Polynomial chebyshev_S(unsigned n);
/// Throws std::invalid_argument for n == 0.
Polynomial chebyshev_A(unsigned n);

/// p(x) = sum_{j<N} columns[j](T_N(x)) * x^j.
struct ChebyshevForm {
  unsigned order = 1;
  std::vector<Polynomial> columns;

  /// Substitutes y := T_N(x) back and sums; reproduces the reduced polynomial.
  Polynomial resubstitute() const;
};

/// Rewrites p in the basis {x^j T_N(x)^k : 0 <= j < N}. N must be odd.
ChebyshevForm chebyshev_reduce(const Polynomial& p, unsigned order);

}  // namespace skein
