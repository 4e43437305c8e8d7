#include "skein/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic integer polynomial.
void reduce_mod_monic(RatPoly& p, const std::vector<BigInt>& modulus) {
  const std::size_t d = modulus.size() - 1;
  trim(p);
  while (p.size() > d) {
    const std::size_t top = p.size() - 1;
    const Rational lead = p[top];
    const std::size_t shift = top - d;
    for (std::size_t i = 0; i < d; ++i) {
      if (modulus[i] != 0) p[shift + i] -= lead * modulus[i];
    }
    p.pop_back();
    trim(p);
  }
}

RatPoly multiply(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Division with remainder over Q[t]; b nonzero and trimmed.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem) {
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Rational factor = rem.back() / b.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

RatPoly subtract(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::vector<BigInt> exact_divide(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> rem = a;
  std::vector<BigInt> quot(a.size() - b.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt factor = rem[k + b.size() - 1] / b.back();
    quot[k] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= factor * b[i];
  }
  return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // t^n - 1 divided by Phi_d for all proper divisors d.
  std::vector<BigInt> poly(n + 1, BigInt(0));
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_divide(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

// ---------------------------------------------------------------------------

ScalarRing ScalarRing::root_of_unity(int order) {
  if (order < 1 || order % 2 == 0) {
    throw std::invalid_argument("root of unity order must be odd and positive, got " +
                                std::to_string(order));
  }
  auto impl = std::make_shared<Impl>();
  impl->mode = RingMode::RootOfUnity;
  impl->order = order;
  impl->cyclotomic = cyclotomic_polynomial(order);
  impl->degree = static_cast<int>(impl->cyclotomic.size()) - 1;
  impl->zeta_powers.reserve(order);
  for (int j = 0; j < order; ++j) {
    RatPoly p(j + 1, Rational(0));
    p[j] = 1;
    reduce_mod_monic(p, impl->cyclotomic);
    impl->zeta_powers.push_back(std::move(p));
  }
  return ScalarRing(std::move(impl));
}

ScalarRing ScalarRing::generic() {
  static const auto impl = [] {
    auto p = std::make_shared<Impl>();
    p->mode = RingMode::Generic;
    return std::shared_ptr<const Impl>(p);
  }();
  return ScalarRing(impl);
}

bool ScalarRing::operator==(const ScalarRing& other) const {
  return impl_ == other.impl_ || (impl_->mode == other.impl_->mode && impl_->order == other.impl_->order);
}

std::string ScalarRing::describe() const {
  if (is_root_of_unity()) return "Q(zeta_" + std::to_string(order()) + ")";
  return "Q[v,v^-1]";
}

Scalar ScalarRing::zero() const { return Scalar(*this); }

Scalar ScalarRing::one() const { return from_int(1); }

Scalar ScalarRing::from_int(long value) const { return from_rational(Rational(value)); }

Scalar ScalarRing::from_rational(const Rational& value) const {
  Scalar s(*this);
  if (value != 0) {
    s.coeffs_.push_back(value);
    s.coeffs_.back().canonicalize();  // callers may hand in e.g. Rational(3, 3)
  }
  return s;
}

Scalar ScalarRing::q_half_power(long m) const {
  Scalar s(*this);
  if (is_root_of_unity()) {
    const long n = order();
    const long r = ((m % n) + n) % n;
    s.coeffs_ = impl_->zeta_powers[r];
  } else {
    s.low_ = m;
    s.coeffs_.push_back(Rational(1));
  }
  return s;
}

Scalar ScalarRing::q_power(long m) const { return q_half_power(2 * m); }

// ---------------------------------------------------------------------------

void Scalar::check_ring(const Scalar& rhs) const {
  if (ring_ != rhs.ring_) {
    throw std::invalid_argument("scalar ring mismatch: " + ring_.describe() + " vs " +
                                rhs.ring_.describe());
  }
}

void Scalar::normalize() {
  if (ring_.is_root_of_unity()) {
    if (low_ != 0) {
      // fold t^low into the coefficients before reducing
      const long n = ring_.order();
      const long shift = ((low_ % n) + n) % n;
      RatPoly shifted(coeffs_.size() + shift, Rational(0));
      for (std::size_t i = 0; i < coeffs_.size(); ++i) shifted[i + shift] = coeffs_[i];
      coeffs_ = std::move(shifted);
      low_ = 0;
    }
    reduce_mod_monic(coeffs_, ring_.cyclotomic());
    return;
  }
  trim(coeffs_);
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
}

bool Scalar::is_one() const {
  return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rational Scalar::coefficient(long exponent) const {
  const long i = exponent - low_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_ring(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const long lo = std::min(low_, rhs.low_);
  const long hi = std::max(low_ + static_cast<long>(coeffs_.size()),
                           rhs.low_ + static_cast<long>(rhs.coeffs_.size()));
  if (lo != low_ || hi != low_ + static_cast<long>(coeffs_.size())) {
    RatPoly merged(hi - lo, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) merged[low_ - lo + i] = coeffs_[i];
    coeffs_ = std::move(merged);
    low_ = lo;
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[rhs.low_ - low_ + i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_ring(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  coeffs_ = multiply(coeffs_, rhs.coeffs_);
  low_ += rhs.low_;
  normalize();
  return *this;
}

Scalar Scalar::times_q_half_power(long m) const {
  if (is_zero()) return *this;
  if (ring_.is_root_of_unity()) return *this * ring_.q_half_power(m);
  Scalar out = *this;
  out.low_ += m;
  return out;
}

Scalar Scalar::times_rational(const Rational& r) const {
  Rational f = r;
  f.canonicalize();
  if (f == 0) return ring_.zero();
  Scalar out = *this;
  for (auto& c : out.coeffs_) c *= f;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (!ring_.is_root_of_unity()) {
    if (coeffs_.size() != 1) {
      throw std::domain_error("inverse of non-unit " + to_string() + " in Laurent ring");
    }
    Scalar out(ring_);
    out.low_ = -low_;
    out.coeffs_.push_back(1 / coeffs_[0]);
    return out;
  }
  // Extended Euclid: find s with s*x = 1 mod Phi_N.
  RatPoly modulus(ring_.cyclotomic().begin(), ring_.cyclotomic().end());
  RatPoly r0 = modulus, r1 = coeffs_;
  RatPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s = subtract(s0, multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi_N is irreducible.
  if (r0.size() != 1) throw std::domain_error("scalar is not invertible");
  Scalar out(ring_);
  out.coeffs_ = s0;
  for (auto& c : out.coeffs_) c /= r0[0];
  out.normalize();
  return out;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = ring_.one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool Scalar::is_q_half_monomial(bool allow_sign, long* exponent_out) const {
  if (is_zero()) return false;
  if (!ring_.is_root_of_unity()) {
    if (coeffs_.size() != 1) return false;
    if (coeffs_[0] != 1 && !(allow_sign && coeffs_[0] == -1)) return false;
    if (exponent_out) *exponent_out = low_;
    return true;
  }
  const auto& powers = ring_.impl_->zeta_powers;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (coeffs_ == powers[j]) {
      if (exponent_out) *exponent_out = static_cast<long>(j);
      return true;
    }
    if (allow_sign) {
      RatPoly neg = powers[j];
      for (auto& c : neg) c = -c;
      if (coeffs_ == neg) {
        if (exponent_out) *exponent_out = static_cast<long>(j);
        return true;
      }
    }
  }
  return false;
}

bool Scalar::operator==(const Scalar& rhs) const {
  return ring_ == rhs.ring_ && low_ == rhs.low_ && coeffs_ == rhs.coeffs_;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  const char var = ring_.is_root_of_unity() ? 'z' : 'v';
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const long e = low_ + static_cast<long>(i);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace skein
