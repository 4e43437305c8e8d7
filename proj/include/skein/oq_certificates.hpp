#pragma once

// Constructive checks of the A_q-module structure of O_q(SL2) at an odd root
// of unity: independence of {O_k : k in D}, localized spanning, spanning by
// D u B, and the tensor-power version of independence.

#include <map>
#include <string>
#include <vector>

#include "skein/oq_sl2.hpp"

namespace skein::oq {

/// sum_k coeffs[k] * O_k.
OqElement combine(const OqAlgebra& alg, const std::map<PbwIndex, OqElement>& coeffs);

using IndexTuple = std::vector<PbwIndex>;

struct IndependenceCertificate {
  bool certified = false;
  /// psi(v, k) pairwise distinct over every support index N v of every coeffs[k].
  bool degrees_distinct = false;
  /// The expanded sum is nonzero.
  bool nonzero = false;
  /// Single-entry tuples for O_q itself, r-tuples for tensor powers.
  IndexTuple predicted_degree;
  IndexTuple actual_degree;
  std::string detail;
};

/// Checks sum_k coeffs[k] O_k != 0 for nonzero A_q coefficients indexed by D.
/// Throws std::invalid_argument when a key is outside D or a coefficient is
/// zero or not in A_q.
IndependenceCertificate independence_certificate(const OqAlgebra& alg, const std::map<PbwIndex, OqElement>& coeffs);

struct LocalizedExpression {
  unsigned d_power = 0;  // s: the identity holds after multiplying by (d^N)^s
  std::map<PbwIndex, OqElement> coeffs;  // keys in D, values in A_q
};

/// (d^N)^s O_m = sum_{k in D} coeffs[k] O_k.
LocalizedExpression localized_express(const OqAlgebra& alg, const PbwIndex& m);
bool verify_localized(const OqAlgebra& alg, const PbwIndex& m, const LocalizedExpression& expr);

/// O_m = sum_{k in D u B} coeffs[k] O_k with coefficients in A_q.
std::map<PbwIndex, OqElement> express_in_DB(const OqAlgebra& alg, const PbwIndex& m);
bool verify_DB(const OqAlgebra& alg, const PbwIndex& m, const std::map<PbwIndex, OqElement>& coeffs);

// ---------------------------------------------------------------------------
// Tensor powers O_q(SL2)^{(x) r} with componentwise multiplication.

class TensorElement {
 public:
  using Terms = std::map<IndexTuple, Scalar>;

  TensorElement(ScalarRing ring, std::size_t arity) : ring_(std::move(ring)), arity_(arity) {}

  const ScalarRing& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const IndexTuple& idx, const Scalar& c);
  TensorElement& operator+=(const TensorElement& rhs);
  bool operator==(const TensorElement& rhs) const {
    return ring_ == rhs.ring_ && arity_ == rhs.arity_ && terms_ == rhs.terms_;
  }

 private:
  ScalarRing ring_;
  std::size_t arity_;
  Terms terms_;
};

/// x_1 (x) ... (x) x_r.
TensorElement tensor_product(const std::vector<OqElement>& factors);
TensorElement tensor_mul(const OqAlgebra& alg, const TensorElement& x, const TensorElement& y);
/// (x_1 (x) ... (x) x_r)(y_1 (x) ... (x) y_r); throws std::invalid_argument on arity mismatch.
TensorElement tensor_mul(const OqAlgebra& alg, const std::vector<OqElement>& xs, const std::vector<OqElement>& ys);
/// Lexicographically largest index tuple.
IndexTuple deg(const TensorElement& x);

/// Independence of {O_{k_1} (x) ... (x) O_{k_r} : k_i in D} over A_q^{(x) r}:
/// coefficients are A_q^{(x) r} elements keyed by D-tuples.
IndependenceCertificate tensor_independence_certificate(const OqAlgebra& alg,
                                                        const std::map<IndexTuple, TensorElement>& coeffs);

}  // namespace skein::oq
