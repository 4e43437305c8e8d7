#pragma once

// Exact scalars for the coefficient ring Q(q^{1/2}).
//
// Two modes:
//   RootOfUnity(N): Q[t]/Phi_N(t), with t = zeta = q^{1/2} a primitive N-th
//                   root of unity (N odd). This is a field.
//   Generic:        Q[v, v^-1], with v = q^{1/2} a formal variable.
//
// Every Scalar is kept in canonical form (reduced mod Phi_N, trimmed, GMP
// rationals in lowest terms), so operator== is exact equality.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace skein {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class RingMode { RootOfUnity, Generic };

class Scalar;

class ScalarRing {
 public:
  /// Throws std::invalid_argument unless N is odd and positive.
  static ScalarRing root_of_unity(int order);
  static ScalarRing generic();

  RingMode mode() const { return impl_->mode; }
  bool is_root_of_unity() const { return impl_->mode == RingMode::RootOfUnity; }
  /// N in RootOfUnity mode, 0 in Generic mode.
  int order() const { return impl_->order; }
  /// Coefficients of Phi_N, lowest degree first (RootOfUnity mode only).
  const std::vector<BigInt>& cyclotomic() const { return impl_->cyclotomic; }
  /// deg Phi_N = phi(N).
  int degree() const { return impl_->degree; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const Rational& value) const;
  /// (q^{1/2})^m. q^m is q_half_power(2m).
  Scalar q_half_power(long m) const;
  Scalar q_power(long m) const;

  bool operator==(const ScalarRing& other) const;
  bool operator!=(const ScalarRing& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  friend class Scalar;
  struct Impl {
    RingMode mode = RingMode::Generic;
    int order = 0;
    int degree = 0;
    std::vector<BigInt> cyclotomic;
    // zeta^j reduced mod Phi_N for 0 <= j < N
    std::vector<std::vector<Rational>> zeta_powers;
  };
  explicit ScalarRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(int n);

class Scalar {
 public:
  explicit Scalar(const ScalarRing& ring) : ring_(ring) {}

  const ScalarRing& ring() const { return ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  /// Lowest exponent of the stored representation (always 0 in RootOfUnity mode).
  long low_exponent() const { return low_; }
  /// Coefficient of t^(low_exponent()+i).
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^e in the canonical representation.
  Rational coefficient(long exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }

  /// Multiply by (q^{1/2})^m.
  Scalar times_q_half_power(long m) const;
  Scalar times_rational(const Rational& r) const;

  /// Throws std::domain_error for zero, or for non-units in Generic mode.
  Scalar inverse() const;
  Scalar pow(long e) const;

  /// True iff this equals +-(q^{1/2})^m for some m (sign allowed when `allow_sign`).
  bool is_q_half_monomial(bool allow_sign, long* exponent_out = nullptr) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  friend class ScalarRing;
  void normalize();
  void check_ring(const Scalar& rhs) const;

  ScalarRing ring_;
  long low_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace skein
