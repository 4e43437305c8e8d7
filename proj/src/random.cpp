#include "skein/random.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace skein {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  Rng rng(0);
  rng.engine_.seed(seq);
  return rng;
}

long Rng::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<long>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % range);
}

Scalar random_nonzero_scalar(const ScalarRing& ring, Rng& rng) {
  for (;;) {
    Scalar s = ring.from_int(rng.uniform(1, 3) * (rng.coin() ? 1 : -1)).times_q_half_power(rng.uniform(-6, 6));
    if (rng.uniform(0, 3) == 0) s += ring.from_int(rng.uniform(-3, 3)).times_q_half_power(rng.uniform(-6, 6));
    if (!s.is_zero()) return s;
  }
}

oq::PbwIndex random_lambda_index(Rng& rng, std::uint32_t max_entry) {
  oq::PbwIndex idx;
  for (auto& e : idx.k) e = static_cast<std::uint32_t>(rng.uniform(0, max_entry));
  if (idx.k[0] != 0 && idx.k[1] != 0) idx.k[rng.coin() ? 0 : 1] = 0;
  return idx;
}

oq::OqElement random_aq_element(const oq::OqAlgebra& alg, Rng& rng, std::size_t max_terms, std::uint32_t max_entry) {
  const unsigned n = oq::frobenius_order(alg);
  for (;;) {
    oq::OqElement x = alg.zero();
    const long terms = rng.uniform(1, static_cast<long>(max_terms));
    for (long t = 0; t < terms; ++t) {
      x.add_term(random_lambda_index(rng, max_entry).scaled(n), random_nonzero_scalar(alg.ring(), rng));
    }
    if (!x.is_zero()) return x;
  }
}

std::map<oq::PbwIndex, oq::OqElement> random_aq_coefficient_map(const oq::OqAlgebra& alg, Rng& rng,
                                                                std::size_t max_keys) {
  const unsigned n = oq::frobenius_order(alg);
  std::map<oq::PbwIndex, oq::OqElement> out;
  const long keys = rng.uniform(1, static_cast<long>(max_keys));
  while (static_cast<long>(out.size()) < keys) {
    const oq::PbwIndex k{0, static_cast<std::uint32_t>(rng.uniform(0, n - 1)),
                         static_cast<std::uint32_t>(rng.uniform(0, n - 1)),
                         static_cast<std::uint32_t>(rng.uniform(0, n - 1))};
    out.emplace(k, random_aq_element(alg, rng));
  }
  return out;
}

Exponent random_balanced_exponent(const ZBasis& zb, Rng& rng, long bound) {
  Exponent coords(zb.rank());
  for (auto& c : coords) c = rng.uniform(-bound, bound);
  return zb.exponent_of(coords);
}

QTElement random_balanced_element(const QuantumTorus& torus, const ZBasis& zb, Rng& rng, std::size_t max_terms,
                                  long bound) {
  for (;;) {
    QTElement x = torus.zero();
    const long terms = rng.uniform(1, static_cast<long>(max_terms));
    for (long t = 0; t < terms; ++t) {
      x += torus.weyl_monomial(random_balanced_exponent(zb, rng, bound)).scaled(random_nonzero_scalar(torus.ring(), rng));
    }
    if (!x.is_zero()) return x;
  }
}

Polynomial random_polynomial(Rng& rng, unsigned degree, long bound) {
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = rng.uniform(-bound, bound);
  while (c[degree] == 0) c[degree] = rng.uniform(-bound, bound);
  return Polynomial(std::move(c));
}

}  // namespace skein
