#pragma once

// Seeded pseudo-random generation for the verification suites.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Per-trial streams are seeded through std::seed_seq (also fully
// specified) from (seed, stream, trial), so a trial draws the same values no
// matter which thread runs it. Bounded integers use rejection sampling rather
// than std::uniform_int_distribution, whose algorithm is implementation-defined.

#include <cstdint>
#include <map>
#include <random>

#include "skein/oq_sl2.hpp"
#include "skein/polynomial.hpp"
#include "skein/quantum_torus.hpp"

namespace skein {

class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng for_trial(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// c * (q^{1/2})^j (+ a second such term sometimes); never zero.
Scalar random_nonzero_scalar(const ScalarRing& ring, Rng& rng);

/// Random index of the PBW set with entries <= max_entry.
oq::PbwIndex random_lambda_index(Rng& rng, std::uint32_t max_entry);

/// Nonzero element of A_q: 1..max_terms terms O_{N v}, entries of v <= max_entry.
oq::OqElement random_aq_element(const oq::OqAlgebra& alg, Rng& rng, std::size_t max_terms = 4,
                                std::uint32_t max_entry = 2);

/// Sparse map from 1..max_keys distinct indices of D to nonzero A_q elements.
std::map<oq::PbwIndex, oq::OqElement> random_aq_coefficient_map(const oq::OqAlgebra& alg, Rng& rng,
                                                                std::size_t max_keys = 6);

/// Random balanced exponent: Z-coordinates in [-bound, bound].
Exponent random_balanced_exponent(const ZBasis& zb, Rng& rng, long bound);

/// Nonzero combination of 1..max_terms balanced Weyl monomials.
QTElement random_balanced_element(const QuantumTorus& torus, const ZBasis& zb, Rng& rng, std::size_t max_terms = 3,
                                  long bound = 2);

/// Integer coefficients in [-bound, bound], exact degree `degree`.
Polynomial random_polynomial(Rng& rng, unsigned degree, long bound = 9);

}  // namespace skein
