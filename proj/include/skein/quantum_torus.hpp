#pragma once

// Chekhov-Fock quantum tori T^mu: Laurent polynomials in Y_1..Y_n with
// Y_i Y_j = mu^{2 sigma_ij} Y_j Y_i. Elements are stored on ordered
// monomials Y_1^k1 ... Y_n^kn; the Weyl monomial
//   Y^k = mu^{-sum_{i<j} k_i k_j sigma_ij} Y_1^k1 ... Y_n^kn
// is order independent and satisfies Y^a Y^b = mu^{a^T sigma b} Y^{a+b}.
//
// mu is realized as (q^{1/2})^s for an integer parameter scale s, so the
// torus at nu = mu^{N^2} is the same construction with scale s N^2.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "skein/linalg.hpp"
#include "skein/scalar.hpp"
#include "skein/triangulation.hpp"

namespace skein {

using Exponent = std::vector<long>;

/// Finite sum of ordered monomials; zero coefficients are never stored.
class QTElement {
 public:
  using Terms = std::map<Exponent, Scalar>;

  QTElement(ScalarRing ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

  const ScalarRing& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Exponent& k) const;

  void add_term(const Exponent& k, const Scalar& c);
  QTElement& operator+=(const QTElement& rhs);
  QTElement& operator-=(const QTElement& rhs);
  QTElement scaled(const Scalar& c) const;
  friend QTElement operator+(QTElement a, const QTElement& b) { return a += b; }
  friend QTElement operator-(QTElement a, const QTElement& b) { return a -= b; }

  bool operator==(const QTElement& rhs) const {
    return ring_ == rhs.ring_ && rank_ == rhs.rank_ && terms_ == rhs.terms_;
  }
  bool operator!=(const QTElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  ScalarRing ring_;
  std::size_t rank_;
  Terms terms_;
};

class QuantumTorus {
 public:
  QuantumTorus(ScalarRing ring, ExchangeMatrix sigma, long param_scale = 1);

  const ScalarRing& ring() const { return ring_; }
  const ExchangeMatrix& sigma() const { return sigma_; }
  std::size_t rank() const { return sigma_.size(); }
  long param_scale() const { return scale_; }

  /// mu^e as a scalar.
  Scalar mu_power(long e) const;

  QTElement zero() const { return QTElement(ring_, rank()); }
  QTElement one() const;
  /// Y_i (exponent +1) or Y_i^{-1} (exponent -1).
  QTElement generator(std::size_t i, long exponent = 1) const;
  /// Y_1^k1 ... Y_n^kn.
  QTElement ordered_monomial(const Exponent& k) const;
  /// The Weyl-normalized monomial Y^k.
  QTElement weyl_monomial(const Exponent& k) const;
  /// The plain product Y_{i1} Y_{i2} ... Y_{ik}.
  QTElement word(const std::vector<std::size_t>& letters) const;
  /// [Y_{i1} ... Y_{ik}] = mu^{-sum_{j<l} sigma_{i_j i_l}} Y_{i1} ... Y_{ik}.
  QTElement weyl_word(const std::vector<std::size_t>& letters) const;

  /// -sum_{i<j} k_i k_j sigma_ij.
  long weyl_exponent(const Exponent& k) const;
  /// a^T sigma b.
  long pairing(const Exponent& a, const Exponent& b) const;

  /// Serial reference product.
  QTElement mul(const QTElement& x, const QTElement& y) const;
  /// Same result as mul with the terms of x split across OpenMP threads.
  QTElement mul_parallel(const QTElement& x, const QTElement& y) const;
  QTElement power(const QTElement& x, unsigned e) const;
  bool commute(const QTElement& x, const QTElement& y) const;

 private:
  void check(const QTElement& x) const;
  void accumulate(const QTElement& x, const QTElement& y, std::size_t begin, std::size_t end, QTElement& out) const;

  ScalarRing ring_;
  ExchangeMatrix sigma_;
  long scale_;
};

/// H_v = [Y_{i1} ... Y_{ik}] over the fan of puncture v.
QTElement central_H(const QuantumTorus& torus, const Triangulation& t, std::size_t v);
QTElement central_H(const QuantumTorus& torus, const Triangulation& t, const std::string& puncture);

/// F: T^nu -> T^mu, Y^k -> Y^{Nk} (Weyl monomials to Weyl monomials).
/// Throws std::invalid_argument unless both tori share ring and sigma and
/// nu.param_scale() == N^2 * mu.param_scale().
QTElement frobenius_qt(const QuantumTorus& nu, const QuantumTorus& mu, unsigned order, const QTElement& x);

/// A basis Z_1..Z_n of the balanced lattice with Z_i = H_{v_i} for i <= p.
struct ZBasis {
  IntMatrix basis;          // columns are the exponent vectors of Z_1..Z_n
  RationalMatrix inverse;   // basis^{-1}
  IntMatrix lattice;        // echelon basis of the balanced lattice
  BigInt lattice_index;     // [Z^n : balanced lattice]
  std::size_t puncture_count = 0;

  std::size_t rank() const { return basis.cols(); }
  Exponent z_vector(std::size_t i) const;
  /// Coordinates of a balanced exponent over Z_1..Z_n; throws
  /// std::invalid_argument if k is not in the lattice.
  Exponent coordinates(const Exponent& k) const;
  /// sum_i c_i z_i.
  Exponent exponent_of(const Exponent& coords) const;
};

/// Completes {H_1..H_p} to a basis of the balanced lattice and verifies it.
/// Throws LatticeError if the completion does not exist.
ZBasis balanced_z_basis(const Triangulation& t);

/// Z^c = Weyl monomial at sum_i c_i z_i.
QTElement z_monomial(const QuantumTorus& torus, const ZBasis& zb, const Exponent& coords);

/// First p Z-coordinates of a single exponent.
Exponent grade_of(const ZBasis& zb, const Exponent& k);
/// Lexicographic maximum of grade_of over the support; throws std::domain_error on zero.
Exponent qt_deg(const QTElement& x, const ZBasis& zb);
/// x split into its homogeneous components D_g.
std::map<Exponent, QTElement> grade(const QTElement& x, const ZBasis& zb);

struct CenterFreeCertificate {
  bool certified = false;
  bool distinct = false;
  /// Set only by the expanding overload.
  bool expanded = false;
  bool nonzero = false;
  Exponent predicted_degree;
  Exponent actual_degree;
  std::string detail;
};

/// Combinatorial part: the shifted degrees N x_k + k are pairwise distinct.
CenterFreeCertificate center_free_certificate(unsigned order, std::size_t p, const std::vector<Exponent>& c0,
                                              const std::map<Exponent, Exponent>& x_map);

/// Full certificate: x_k = qt_deg(l_k) for nonzero balanced l_k in T^nu; the
/// sum  sum_k F(l_k) prod_i (Z_i + Z_i^{-1})^{k_i}  is expanded in T^mu and its
/// degree compared with max_k (N x_k + k).
CenterFreeCertificate center_free_certificate(const QuantumTorus& nu, const QuantumTorus& mu, const ZBasis& zb,
                                              unsigned order, const std::map<Exponent, QTElement>& l_map);

std::string exponent_string(const Exponent& k);

}  // namespace skein
