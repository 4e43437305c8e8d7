#pragma once

// The quantum coordinate algebra O_q(SL2), generated by a, b, c, d with
//
//   ca = q^2 ac,  db = q^2 bd,  ba = q^2 ab,  dc = q^2 cd,
//   bc = cb,      ad - q^-2 bc = 1,           da - q^2 cb = 1,
//
// stored on the PBW basis O_k = a^k1 d^k2 b^k3 c^k4 with k1*k2 = 0.

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "skein/scalar.hpp"

namespace skein::oq {

/// Exponents of a, d, b, c (in that order). Ordered lexicographically.
struct PbwIndex {
  std::array<std::uint32_t, 4> k{};

  PbwIndex() = default;
  PbwIndex(std::uint32_t a, std::uint32_t d, std::uint32_t b, std::uint32_t c) : k{a, d, b, c} {}

  std::uint32_t a() const { return k[0]; }
  std::uint32_t d() const { return k[1]; }
  std::uint32_t b() const { return k[2]; }
  std::uint32_t c() const { return k[3]; }

  /// Membership in the PBW index set: k1 * k2 == 0.
  bool in_lambda() const { return k[0] == 0 || k[1] == 0; }
  PbwIndex scaled(std::uint32_t factor) const { return {k[0] * factor, k[1] * factor, k[2] * factor, k[3] * factor}; }
  friend PbwIndex operator+(const PbwIndex& x, const PbwIndex& y) {
    return {x.k[0] + y.k[0], x.k[1] + y.k[1], x.k[2] + y.k[2], x.k[3] + y.k[3]};
  }

  auto operator<=>(const PbwIndex&) const = default;
  std::string to_string() const;
};

/// Finite linear combination of PBW monomials; zero coefficients are never stored.
class OqElement {
 public:
  using Terms = std::map<PbwIndex, Scalar>;

  explicit OqElement(ScalarRing ring) : ring_(std::move(ring)) {}

  const ScalarRing& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const PbwIndex& idx) const;

  /// Adds c * O_idx; idx must lie in the PBW index set.
  void add_term(const PbwIndex& idx, const Scalar& c);

  OqElement& operator+=(const OqElement& rhs);
  OqElement& operator-=(const OqElement& rhs);
  OqElement operator-() const;
  OqElement scaled(const Scalar& c) const;
  friend OqElement operator+(OqElement a, const OqElement& b) { return a += b; }
  friend OqElement operator-(OqElement a, const OqElement& b) { return a -= b; }

  bool operator==(const OqElement& rhs) const { return ring_ == rhs.ring_ && terms_ == rhs.terms_; }
  bool operator!=(const OqElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  ScalarRing ring_;
  Terms terms_;
};

enum class Strategy { Leftmost, Rightmost };

class OqAlgebra {
 public:
  explicit OqAlgebra(ScalarRing ring) : ring_(std::move(ring)) {}
  OqAlgebra(const OqAlgebra& other) : ring_(other.ring_) {}

  const ScalarRing& ring() const { return ring_; }

  OqElement zero() const { return OqElement(ring_); }
  OqElement one() const { return monomial({0, 0, 0, 0}); }
  /// O_idx for idx in the PBW index set; throws std::invalid_argument otherwise.
  OqElement monomial(const PbwIndex& idx, const Scalar& coeff) const;
  OqElement monomial(const PbwIndex& idx) const { return monomial(idx, ring_.one()); }
  /// One of 'a', 'b', 'c', 'd'.
  OqElement generator(char g) const;
  /// a^k1 d^k2 b^k3 c^k4 expanded on the PBW basis, for any quadruple.
  OqElement ordered_product(const PbwIndex& k) const;

  /// Product via the closed-form monomial multiplication rule (serial reference).
  OqElement mul(const OqElement& x, const OqElement& y) const;
  /// Same result as mul, terms of x split across OpenMP threads.
  OqElement mul_parallel(const OqElement& x, const OqElement& y) const;
  OqElement mul_monomials(const PbwIndex& x, const PbwIndex& y) const;
  OqElement power(const OqElement& x, unsigned e) const;

  /// Normal form of a word over {a,b,c,d} by rewriting with the defining
  /// relations; `strategy` picks which redex is reduced first.
  OqElement normal_form(std::string_view word, Strategy strategy = Strategy::Leftmost) const;
  OqElement normal_form(const std::vector<std::pair<Scalar, std::string>>& combination,
                        Strategy strategy = Strategy::Leftmost) const;

  /// Coefficients (in u = bc) of a^n d^n = prod_{i=1..n} (1 + q^{2-4i} u).
  const std::vector<Scalar>& ad_polynomial(unsigned n) const;
  /// Coefficients (in u = bc) of d^n a^n = prod_{i=1..n} (1 + q^{4i-2} u).
  const std::vector<Scalar>& da_polynomial(unsigned n) const;

 private:
  void accumulate_product(const PbwIndex& x, const PbwIndex& y, const Scalar& coeff, OqElement& out) const;
  const std::vector<Scalar>& cached_polynomial(std::deque<std::vector<Scalar>>& cache, unsigned n, int sign) const;

  ScalarRing ring_;
  mutable std::mutex cache_mutex_;
  mutable std::deque<std::vector<Scalar>> ad_cache_;
  mutable std::deque<std::vector<Scalar>> da_cache_;
};

/// Lexicographically largest index in the support. Throws std::domain_error on zero.
PbwIndex deg(const OqElement& x);

/// The degree map N^4 -> Lambda: the leading PBW index of a^k1 d^k2 b^k3 c^k4.
PbwIndex phi(const PbwIndex& k);

/// The leading-index set D = {(0,k2,k3,k4) : 0 <= k2,k3,k4 < N}.
bool in_D(const PbwIndex& idx, unsigned order);
/// B = {(N-j, 0, k2, k3) : 1 <= j < N, 0 <= k2,k3 < N, k2 < j or k3 < j}.
bool in_B(const PbwIndex& idx, unsigned order);
std::vector<PbwIndex> enumerate_D(unsigned order);
std::vector<PbwIndex> enumerate_B(unsigned order);
std::size_t count_D(unsigned order);
std::size_t count_DB(unsigned order);

/// phi(N u + v) for u in Lambda, v in D; throws std::invalid_argument otherwise.
PbwIndex psi(unsigned order, const PbwIndex& u, const PbwIndex& v);

/// Leading index of a^k1 d^k2 b^k3 c^k4 computed both ways.
struct DegreePair {
  PbwIndex via_phi;
  PbwIndex via_normal_form;
  bool agree() const { return via_phi == via_normal_form; }
};
DegreePair deg_of_monomial(const OqAlgebra& alg, const PbwIndex& k);

enum class ETopCoefficient { ExactQPower, SignedQPower };

/// Membership in E_t: supported on {(0,0,j,j) : j <= t}, constant term 1 and
/// top coefficient a power of q (optionally up to sign). E_0 = {1}.
bool is_in_E(const OqElement& x, unsigned t, ETopCoefficient rule = ETopCoefficient::ExactQPower);

/// The Frobenius order N of a root-of-unity algebra; throws in Generic mode.
unsigned frobenius_order(const OqAlgebra& alg);
/// g^N, the generator images spanning A_q.
OqElement frobenius_generator_image(const OqAlgebra& alg, char g);
/// O_{N v} for v in Lambda.
OqElement aq_monomial(const OqAlgebra& alg, const PbwIndex& v);
/// Supported on N * Lambda.
bool in_Aq(const OqElement& x, unsigned order);

}  // namespace skein::oq
