#include <gtest/gtest.h>

#include "skein/quantum_torus.hpp"
#include "skein/random.hpp"

using namespace skein;

namespace {

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

// a^T sigma b straight from the matrix.
long pairing_oracle(const ExchangeMatrix& m, const Exponent& a, const Exponent& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * m(i, j) * b[j];
  return s;
}

struct Surface {
  Triangulation t;
  ExchangeMatrix sigma;
  ZBasis zb;
};

Surface surface(const Triangulation& t) { return {t, sigma_from_fans(t), balanced_z_basis(t)}; }

}  // namespace

TEST(QuantumTorus, TwoGeneratorExample) {
  const ScalarRing R = ScalarRing::root_of_unity(5);
  const QuantumTorus T(R, ExchangeMatrix{{{0, 1}, {-1, 0}}});
  EXPECT_EQ(T.weyl_word({0, 1}), T.word({0, 1}).scaled(R.q_half_power(-1)));
  EXPECT_EQ(T.mul(T.generator(0), T.generator(1)), T.mul(T.generator(1), T.generator(0)).scaled(R.q_half_power(2)));
  EXPECT_EQ(T.weyl_word({0, 1}), T.weyl_word({1, 0}));
  EXPECT_EQ(T.weyl_monomial({1, 1}), T.weyl_word({0, 1}));
  EXPECT_EQ(T.mul(T.generator(0), T.generator(0, -1)), T.one());
  EXPECT_EQ(T.mu_power(3), R.q_half_power(3));
}

TEST(QuantumTorus, NuIsTrivialAtRootOfUnity) {
  for (int n : {3, 5, 7}) {
    const ScalarRing R = ScalarRing::root_of_unity(n);
    const QuantumTorus nu(R, sigma_from_fans(Triangulation::once_punctured_torus()), static_cast<long>(n) * n);
    EXPECT_EQ(nu.mu_power(1), R.one());
    EXPECT_TRUE(nu.commute(nu.generator(0), nu.generator(1)));
  }
}

TEST(QuantumTorus, GeneratorCommutation) {
  const auto s = surface(Triangulation::four_punctured_sphere());
  const QuantumTorus T(ScalarRing::root_of_unity(5), s.sigma);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_EQ(T.mul(T.generator(i), T.generator(j)),
                T.mul(T.generator(j), T.generator(i)).scaled(T.mu_power(2 * s.sigma(i, j))));
}

TEST(QuantumTorus, WeylProductRule) {
  const auto s = surface(Triangulation::four_punctured_sphere());
  const QuantumTorus T(ScalarRing::root_of_unity(3), s.sigma);
  for (unsigned t = 0; t < 100; ++t) {
    Rng rng = Rng::for_trial(3, 0, t);
    Exponent a(6), b(6);
    for (auto& v : a) v = rng.uniform(-3, 3);
    for (auto& v : b) v = rng.uniform(-3, 3);
    EXPECT_EQ(T.pairing(a, b), pairing_oracle(s.sigma, a, b));
    EXPECT_EQ(T.mul(T.weyl_monomial(a), T.weyl_monomial(b)),
              T.weyl_monomial(add(a, b)).scaled(T.mu_power(pairing_oracle(s.sigma, a, b))));
  }
}

TEST(QuantumTorus, WeylWordIsOrderIndependent) {
  const auto s = surface(Triangulation::once_punctured_torus());
  const QuantumTorus T(ScalarRing::generic(), s.sigma);
  const std::vector<std::size_t> w{0, 1, 2, 0, 1, 2};
  std::vector<std::size_t> perm = w;
  std::sort(perm.begin(), perm.end());
  do {
    EXPECT_EQ(T.weyl_word(perm), T.weyl_monomial({2, 2, 2}));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(QuantumTorus, ParallelMatchesSerial) {
  const auto s = surface(Triangulation::four_punctured_sphere());
  const QuantumTorus T(ScalarRing::root_of_unity(5), s.sigma);
  for (unsigned t = 0; t < 10; ++t) {
    Rng rng = Rng::for_trial(4, 0, t);
    const QTElement x = random_balanced_element(T, s.zb, rng, 8);
    const QTElement y = random_balanced_element(T, s.zb, rng, 8);
    EXPECT_EQ(T.mul(x, y), T.mul_parallel(x, y));
  }
}

TEST(QuantumTorus, RejectsForeignElements) {
  const QuantumTorus T(ScalarRing::root_of_unity(3), sigma_from_fans(Triangulation::once_punctured_torus()));
  const QuantumTorus U(ScalarRing::root_of_unity(3), sigma_from_fans(Triangulation::four_punctured_sphere()));
  EXPECT_THROW(T.mul(T.one(), U.one()), std::invalid_argument);
}

TEST(CentralH, OncePuncturedTorus) {
  const auto s = surface(Triangulation::once_punctured_torus());
  const QuantumTorus T(ScalarRing::root_of_unity(3), s.sigma);
  const QTElement h = central_H(T, s.t, 0);
  EXPECT_EQ(h, T.weyl_monomial({2, 2, 2}));
  EXPECT_EQ(h, central_H(T, s.t, "v0"));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(T.commute(h, T.generator(i)));
  EXPECT_FALSE(T.commute(T.generator(0), T.generator(1)));
}

TEST(CentralH, FourPuncturedSphere) {
  const auto s = surface(Triangulation::four_punctured_sphere());
  const QuantumTorus T(ScalarRing::generic(), s.sigma);
  for (std::size_t v = 0; v < 4; ++v) {
    const QTElement h = central_H(T, s.t, v);
    EXPECT_EQ(h, T.weyl_monomial(h_exponent(s.t, v)));
    for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(T.commute(h, T.generator(i))) << v << " " << i;
  }
}

TEST(Frobenius, MapsWeylMonomials) {
  const unsigned n = 3;
  const auto s = surface(Triangulation::four_punctured_sphere());
  const ScalarRing R = ScalarRing::root_of_unity(n);
  const QuantumTorus mu(R, s.sigma), nu(R, s.sigma, n * n);
  const Exponent k{1, -1, 0, 2, 0, 1};
  Exponent nk(k);
  for (auto& v : nk) v *= n;
  EXPECT_EQ(frobenius_qt(nu, mu, n, nu.weyl_monomial(k)), mu.weyl_monomial(nk));
  EXPECT_THROW(frobenius_qt(mu, mu, n, mu.one()), std::invalid_argument);
  const QuantumTorus other(R, sigma_from_fans(Triangulation::once_punctured_torus()), n * n);
  EXPECT_THROW(frobenius_qt(other, mu, n, other.one()), std::invalid_argument);
}

TEST(Frobenius, RingHomomorphismWithCentralImage) {
  for (unsigned n : {3u, 5u}) {
    const auto s = surface(Triangulation::once_punctured_torus());
    const ScalarRing R = ScalarRing::root_of_unity(static_cast<int>(n));
    const QuantumTorus mu(R, s.sigma), nu(R, s.sigma, static_cast<long>(n * n));
    for (unsigned t = 0; t < 20; ++t) {
      Rng rng = Rng::for_trial(n, 1, t);
      const QTElement x = random_balanced_element(nu, s.zb, rng);
      const QTElement y = random_balanced_element(nu, s.zb, rng);
      const QTElement fx = frobenius_qt(nu, mu, n, x);
      EXPECT_EQ(frobenius_qt(nu, mu, n, nu.mul(x, y)), mu.mul(fx, frobenius_qt(nu, mu, n, y)));
      EXPECT_EQ(frobenius_qt(nu, mu, n, x + y), fx + frobenius_qt(nu, mu, n, y));
      for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(mu.commute(fx, mu.generator(i)));
    }
  }
}

TEST(ZBasis, OncePuncturedTorus) {
  const auto s = surface(Triangulation::once_punctured_torus());
  EXPECT_EQ(s.zb.lattice_index, BigInt(2));
  EXPECT_EQ(s.zb.puncture_count, 1u);
  EXPECT_EQ(s.zb.z_vector(0), (Exponent{2, 2, 2}));
  EXPECT_EQ(s.zb.coordinates({2, 2, 2}), (Exponent{1, 0, 0}));
  EXPECT_THROW(s.zb.coordinates({1, 0, 0}), std::invalid_argument);
}

TEST(ZBasis, FourPuncturedSphere) {
  const auto s = surface(Triangulation::four_punctured_sphere());
  EXPECT_EQ(s.zb.lattice_index, BigInt(8));
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(s.zb.z_vector(v), h_exponent(s.t, v));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(balanced_check(s.zb.z_vector(i), s.t));
}

TEST(ZBasis, CoordinatesRoundTrip) {
  for (const auto& t : {Triangulation::once_punctured_torus(), Triangulation::four_punctured_sphere()}) {
    const auto s = surface(t);
    for (unsigned i = 0; i < 50; ++i) {
      Rng rng = Rng::for_trial(8, 0, i);
      const Exponent k = random_balanced_exponent(s.zb, rng, 4);
      EXPECT_TRUE(balanced_check(k, t));
      EXPECT_EQ(s.zb.exponent_of(s.zb.coordinates(k)), k);
    }
    // Every vector of entries in {-1,0,1} is balanced iff it has coordinates.
    std::vector<Exponent> box{Exponent{}};
    for (std::size_t e = 0; e < t.edge_count; ++e) {
      std::vector<Exponent> next;
      for (const auto& b : box)
        for (long v = -1; v <= 1; ++v) {
          Exponent x(b);
          x.push_back(v);
          next.push_back(x);
        }
      box = next;
    }
    for (const auto& k : box) {
      if (balanced_check(k, t)) {
        EXPECT_NO_THROW(s.zb.coordinates(k));
      } else {
        EXPECT_THROW(s.zb.coordinates(k), std::invalid_argument);
      }
    }
  }
}

TEST(Grading, DegreeIsAdditive) {
  for (const auto& t : {Triangulation::once_punctured_torus(), Triangulation::four_punctured_sphere()}) {
    const auto s = surface(t);
    const QuantumTorus T(ScalarRing::root_of_unity(3), s.sigma);
    EXPECT_EQ(qt_deg(central_H(T, t, 0), s.zb)[0], 1);
    EXPECT_THROW(qt_deg(T.zero(), s.zb), std::domain_error);
    for (unsigned i = 0; i < 40; ++i) {
      Rng rng = Rng::for_trial(9, 0, i);
      const QTElement x = random_balanced_element(T, s.zb, rng, 4);
      const QTElement y = random_balanced_element(T, s.zb, rng, 4);
      EXPECT_EQ(qt_deg(T.mul(x, y), s.zb), add(qt_deg(x, s.zb), qt_deg(y, s.zb)));
      QTElement total = T.zero();
      for (const auto& [g, part] : grade(x, s.zb)) total += part;
      EXPECT_EQ(total, x);
    }
  }
}

TEST(CenterFree, CombinatorialCertificate) {
  const CenterFreeCertificate single = center_free_certificate(3, 1, {{0}}, {{{0}, {5}}});
  EXPECT_TRUE(single.certified);
  const auto ok = center_free_certificate(3, 1, {{0}, {1}, {2}}, {{{0}, {0}}, {{1}, {0}}, {{2}, {0}}});
  EXPECT_TRUE(ok.certified);
  const auto bad = center_free_certificate(3, 1, {{0}, {3}}, {{{0}, {0}}, {{3}, {-1}}});
  EXPECT_FALSE(bad.certified);
  EXPECT_FALSE(bad.distinct);
  EXPECT_THROW(center_free_certificate(3, 1, {}, {}), std::invalid_argument);
  EXPECT_THROW(center_free_certificate(3, 1, {{0}}, {}), std::invalid_argument);
}

TEST(CenterFree, ExpandedCertificate) {
  const unsigned n = 3;
  const auto s = surface(Triangulation::once_punctured_torus());
  const ScalarRing R = ScalarRing::root_of_unity(n);
  const QuantumTorus mu(R, s.sigma), nu(R, s.sigma, n * n);
  for (unsigned t = 0; t < 10; ++t) {
    Rng rng = Rng::for_trial(10, 0, t);
    std::map<Exponent, QTElement> ls;
    for (long k = 0; k < static_cast<long>(n); ++k) ls.emplace(Exponent{k}, random_balanced_element(nu, s.zb, rng));
    const auto cert = center_free_certificate(nu, mu, s.zb, n, ls);
    EXPECT_TRUE(cert.certified) << cert.detail;
    EXPECT_TRUE(cert.expanded && cert.nonzero);
    EXPECT_EQ(cert.predicted_degree, cert.actual_degree);
  }
}
