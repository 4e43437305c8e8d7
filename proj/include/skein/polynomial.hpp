#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

/// Dense univariate polynomial with exact rational coefficients.
/// The leading coefficient is never zero; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  /// Coefficients lowest degree first.
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();
  static Polynomial monomial(std::size_t degree, const Rational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend Polynomial operator*(const Rational& b, Polynomial a) { return a *= b; }

  Polynomial pow(unsigned e) const;
  Rational evaluate(const Rational& at) const;

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// p(q(x)), evaluated by Horner's rule.
Polynomial compose(const Polynomial& p, const Polynomial& q);

}  // namespace skein
