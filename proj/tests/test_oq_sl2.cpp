#include <gtest/gtest.h>

#include <set>

#include "skein/dimensions.hpp"
#include "skein/oq_sl2.hpp"
#include "skein/random.hpp"

using namespace skein;
using namespace skein::oq;

namespace {

std::vector<std::string> all_words(std::size_t max_len) {
  std::vector<std::string> out{""}, layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char g : std::string("abcd")) next.push_back(w + g);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

OqElement product_of_letters(const OqAlgebra& alg, const std::string& w) {
  OqElement x = alg.one();
  for (char g : w) x = alg.mul(x, alg.generator(g));
  return x;
}

}  // namespace

TEST(OqNormalForm, Examples) {
  const OqAlgebra alg(ScalarRing::root_of_unity(5));
  const ScalarRing& R = alg.ring();
  OqElement da = alg.one();
  da.add_term({0, 0, 1, 1}, R.q_power(2));
  EXPECT_EQ(alg.normal_form("da"), da);
  EXPECT_EQ(alg.normal_form("a"), alg.monomial({1, 0, 0, 0}));
  EXPECT_EQ(alg.normal_form("ba"), alg.monomial({1, 0, 1, 0}, R.q_power(2)));
  EXPECT_EQ(alg.normal_form(""), alg.one());
}

TEST(OqNormalForm, ScalarCombinations) {
  const OqAlgebra alg(ScalarRing::generic());
  const ScalarRing& R = alg.ring();
  // ad - q^-2 bc = 1
  const OqElement one = alg.normal_form({{R.one(), "ad"}, {-R.q_power(-2), "bc"}});
  EXPECT_EQ(one, alg.one());
}

TEST(OqNormalForm, RewritingIsConfluentGeneric) {
  const OqAlgebra alg(ScalarRing::generic());
  for (const auto& w : all_words(6)) {
    const OqElement left = alg.normal_form(w, Strategy::Leftmost);
    ASSERT_EQ(left, alg.normal_form(w, Strategy::Rightmost)) << w;
    ASSERT_EQ(left, product_of_letters(alg, w)) << w;
  }
}

TEST(OqNormalForm, RewritingMatchesClosedFormAtRootsOfUnity) {
  for (int n : {3, 5}) {
    const OqAlgebra alg(ScalarRing::root_of_unity(n));
    for (const auto& w : all_words(5)) ASSERT_EQ(alg.normal_form(w), product_of_letters(alg, w)) << n << " " << w;
  }
}

TEST(OqMul, Examples) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  OqElement ad = alg.one();
  ad.add_term({0, 0, 1, 1}, alg.ring().q_power(-2));
  EXPECT_EQ(alg.mul_monomials({1, 0, 0, 0}, {0, 1, 0, 0}), ad);
  const OqElement x = alg.normal_form("cbdab");
  EXPECT_EQ(alg.mul(alg.one(), x), x);
  EXPECT_EQ(alg.mul(x, alg.one()), x);
  EXPECT_EQ(alg.mul(alg.mul(alg.generator('a'), alg.generator('d')), alg.generator('b')),
            alg.mul(alg.generator('a'), alg.mul(alg.generator('d'), alg.generator('b'))));
}

TEST(OqMul, AssociativeOnRandomElements) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  for (unsigned t = 0; t < 30; ++t) {
    Rng rng = Rng::for_trial(99, 1, t);
    std::vector<OqElement> xs;
    for (int i = 0; i < 3; ++i) {
      OqElement x = alg.zero();
      for (int k = 0; k < 3; ++k) x.add_term(random_lambda_index(rng, 3), random_nonzero_scalar(alg.ring(), rng));
      xs.push_back(x);
    }
    EXPECT_EQ(alg.mul(alg.mul(xs[0], xs[1]), xs[2]), alg.mul(xs[0], alg.mul(xs[1], xs[2])));
  }
}

TEST(OqMul, ParallelMatchesSerial) {
  const OqAlgebra alg(ScalarRing::root_of_unity(5));
  for (unsigned t = 0; t < 10; ++t) {
    Rng rng = Rng::for_trial(5, 2, t);
    OqElement x = alg.zero(), y = alg.zero();
    for (int k = 0; k < 12; ++k) {
      x.add_term(random_lambda_index(rng, 5), random_nonzero_scalar(alg.ring(), rng));
      y.add_term(random_lambda_index(rng, 5), random_nonzero_scalar(alg.ring(), rng));
    }
    EXPECT_EQ(alg.mul(x, y), alg.mul_parallel(x, y));
  }
}

TEST(OqMul, AdPolynomialsMatchProductFormula) {
  const OqAlgebra alg(ScalarRing::generic());
  const ScalarRing& R = alg.ring();
  for (unsigned n = 0; n <= 6; ++n) {
    // prod_{i=1..n} (1 + q^{2-4i} u) expanded by hand in the test.
    std::vector<Scalar> ad{R.one()}, da{R.one()};
    for (unsigned i = 1; i <= n; ++i) {
      std::vector<Scalar> nad(ad.size() + 1, R.zero()), nda(da.size() + 1, R.zero());
      for (std::size_t k = 0; k < ad.size(); ++k) {
        nad[k] += ad[k];
        nad[k + 1] += ad[k] * R.q_power(2 - 4 * static_cast<long>(i));
        nda[k] += da[k];
        nda[k + 1] += da[k] * R.q_power(4 * static_cast<long>(i) - 2);
      }
      ad = nad;
      da = nda;
    }
    EXPECT_EQ(alg.ad_polynomial(n), ad) << n;
    EXPECT_EQ(alg.da_polynomial(n), da) << n;
    OqElement expect = alg.zero();
    for (std::size_t k = 0; k < ad.size(); ++k) expect.add_term({0, 0, static_cast<unsigned>(k), static_cast<unsigned>(k)}, ad[k]);
    EXPECT_EQ(product_of_letters(alg, std::string(n, 'a') + std::string(n, 'd')), expect) << n;
  }
}

TEST(OqElement, RejectsIndicesOutsideLambda) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  EXPECT_THROW(alg.monomial({1, 1, 0, 0}), std::invalid_argument);
  OqElement x = alg.zero();
  EXPECT_THROW(x.add_term({2, 1, 0, 0}, alg.ring().one()), std::invalid_argument);
  x.add_term({1, 0, 0, 0}, alg.ring().zero());
  EXPECT_TRUE(x.is_zero());
}

TEST(OqDeg, Examples) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  EXPECT_EQ(deg(alg.normal_form("adbc")), PbwIndex(0, 0, 2, 2));
  EXPECT_EQ(deg(alg.monomial({1, 0, 0, 0})), PbwIndex(1, 0, 0, 0));
  EXPECT_EQ(deg(alg.monomial({0, 2, 1, 0}) + alg.monomial({0, 1, 3, 3})), PbwIndex(0, 2, 1, 0));
  EXPECT_THROW(deg(alg.zero()), std::domain_error);
}

TEST(OqPhi, Examples) {
  EXPECT_EQ(phi({1, 1, 0, 0}), PbwIndex(0, 0, 1, 1));
  EXPECT_EQ(phi({3, 1, 0, 2}), PbwIndex(2, 0, 1, 3));
  EXPECT_EQ(phi({0, 0, 5, 7}), PbwIndex(0, 0, 5, 7));
  EXPECT_EQ(phi({1, 3, 0, 0}), PbwIndex(0, 2, 1, 1));
}

TEST(OqPhi, DegreeOfMonomialExamples) {
  const OqAlgebra alg(ScalarRing::root_of_unity(7));
  EXPECT_EQ(deg_of_monomial(alg, {2, 2, 0, 0}).via_normal_form, PbwIndex(0, 0, 2, 2));
  EXPECT_EQ(deg_of_monomial(alg, {0, 0, 1, 1}).via_normal_form, PbwIndex(0, 0, 1, 1));
  EXPECT_EQ(deg_of_monomial(alg, {1, 3, 0, 0}).via_normal_form, PbwIndex(0, 2, 1, 1));
}

TEST(OqPhi, AgreesWithNormalFormExhaustively) {
  for (unsigned n : {3u, 5u}) {
    const OqAlgebra alg(ScalarRing::root_of_unity(static_cast<int>(n)));
    for (unsigned a = 0; a <= 2 * n; ++a)
      for (unsigned d = 0; d <= 2 * n; ++d)
        for (unsigned b = 0; b <= 2 * n; ++b)
          for (unsigned c = 0; c <= 2 * n; ++c) {
            const DegreePair p = deg_of_monomial(alg, {a, d, b, c});
            ASSERT_TRUE(p.agree()) << PbwIndex(a, d, b, c).to_string();
          }
  }
}

TEST(OqPhi, AgreesInGenericMode) {
  const OqAlgebra alg(ScalarRing::generic());
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned d = 0; d <= 4; ++d)
      for (unsigned b = 0; b <= 2; ++b)
        for (unsigned c = 0; c <= 2; ++c) ASSERT_TRUE(deg_of_monomial(alg, {a, d, b, c}).agree());
}

TEST(OqPsi, Examples) {
  for (const auto& v : enumerate_D(3)) EXPECT_EQ(psi(3, {0, 0, 0, 0}, v), v);
  EXPECT_EQ(psi(3, {1, 0, 0, 0}, {0, 0, 0, 0}), PbwIndex(3, 0, 0, 0));
  EXPECT_EQ(psi(3, {0, 1, 1, 0}, {0, 1, 2, 2}), PbwIndex(0, 4, 5, 2));
  EXPECT_THROW(psi(3, {1, 1, 0, 0}, {0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(psi(3, {0, 0, 0, 0}, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(psi(3, {0, 0, 0, 0}, {0, 3, 0, 0}), std::invalid_argument);
}

TEST(OqPsi, InjectiveOnSmallBox) {
  for (unsigned n : {3u, 5u}) {
    std::set<PbwIndex> seen;
    std::size_t total = 0;
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned d = 0; d <= 2; ++d)
        for (unsigned b = 0; b <= 2; ++b)
          for (unsigned c = 0; c <= 2; ++c) {
            if (a && d) continue;
            for (const auto& v : enumerate_D(n)) {
              ++total;
              seen.insert(psi(n, {a, d, b, c}, v));
            }
          }
    EXPECT_EQ(seen.size(), total) << n;
  }
}

TEST(OqSets, CountsAgainstBruteForceAndFormula) {
  for (unsigned n : {1u, 3u, 5u, 7u, 9u}) {
    // Brute force straight from the set definitions.
    std::size_t d_count = 0, b_count = 0;
    for (unsigned k2 = 0; k2 < n; ++k2)
      for (unsigned k3 = 0; k3 < n; ++k3)
        for (unsigned k4 = 0; k4 < n; ++k4) ++d_count;
    for (unsigned j = 1; j < n; ++j)
      for (unsigned k2 = 0; k2 < n; ++k2)
        for (unsigned k3 = 0; k3 < n; ++k3)
          if (k2 < j || k3 < j) ++b_count;
    EXPECT_EQ(count_D(n), d_count);
    EXPECT_EQ(count_DB(n), d_count + b_count);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(count_DB(n))), db_count_formula(n));
    for (const auto& k : enumerate_D(n)) EXPECT_TRUE(in_D(k, n) && !in_B(k, n));
    for (const auto& k : enumerate_B(n)) EXPECT_TRUE(in_B(k, n) && !in_D(k, n));
  }
  EXPECT_EQ(count_D(3), 27u);
  EXPECT_EQ(count_DB(3), 40u);
  EXPECT_EQ(count_DB(5), 195u);
}

TEST(OqE, Examples) {
  const OqAlgebra alg(ScalarRing::root_of_unity(5));
  EXPECT_TRUE(is_in_E(alg.normal_form("ad"), 1));
  EXPECT_TRUE(is_in_E(alg.one(), 0));
  EXPECT_TRUE(is_in_E(alg.normal_form("aadd"), 2));
  EXPECT_FALSE(is_in_E(alg.normal_form("da") + alg.one(), 1));
  EXPECT_FALSE(is_in_E(alg.normal_form("a"), 1));
  EXPECT_FALSE(is_in_E(alg.normal_form("ad"), 0));
  OqElement signed_top = alg.one();
  signed_top.add_term({0, 0, 1, 1}, -alg.ring().q_power(3));
  EXPECT_FALSE(is_in_E(signed_top, 1, ETopCoefficient::ExactQPower));
  EXPECT_TRUE(is_in_E(signed_top, 1, ETopCoefficient::SignedQPower));
}

TEST(OqE, PowersOfAdUpToTen) {
  for (const ScalarRing& R : {ScalarRing::root_of_unity(5), ScalarRing::generic()}) {
    const OqAlgebra alg(R);
    for (unsigned t = 0; t <= 10; ++t) EXPECT_TRUE(is_in_E(alg.ordered_product({t, t, 0, 0}), t)) << t;
  }
}

TEST(OqE, GenericRequiresIntegralQPower) {
  const OqAlgebra alg(ScalarRing::generic());
  OqElement x = alg.one();
  x.add_term({0, 0, 1, 1}, alg.ring().q_half_power(1));
  EXPECT_FALSE(is_in_E(x, 1));
}

TEST(OqFrobenius, GeneratorImagesAreCentral) {
  for (int n : {3, 5, 7}) {
    const OqAlgebra alg(ScalarRing::root_of_unity(n));
    for (char g : std::string("abcd")) {
      const OqElement fg = frobenius_generator_image(alg, g);
      EXPECT_EQ(fg, alg.power(alg.generator(g), static_cast<unsigned>(n)));
      for (char h : std::string("abcd")) {
        EXPECT_EQ(alg.mul(fg, alg.generator(h)), alg.mul(alg.generator(h), fg)) << n << g << h;
        const OqElement fh = frobenius_generator_image(alg, h);
        EXPECT_EQ(alg.mul(fg, fh), alg.mul(fh, fg));
      }
    }
  }
}

TEST(OqFrobenius, NotCentralBelowN) {
  const OqAlgebra alg(ScalarRing::root_of_unity(5));
  const OqElement a2 = alg.power(alg.generator('a'), 2);
  EXPECT_NE(alg.mul(a2, alg.generator('b')), alg.mul(alg.generator('b'), a2));
}

TEST(OqFrobenius, AqMonomials) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  EXPECT_EQ(frobenius_generator_image(alg, 'a'), alg.monomial({3, 0, 0, 0}));
  EXPECT_EQ(aq_monomial(alg, {0, 0, 0, 0}), alg.one());
  EXPECT_EQ(aq_monomial(alg, {0, 1, 1, 0}), alg.monomial({0, 3, 3, 0}));
  EXPECT_TRUE(in_Aq(alg.monomial({3, 0, 6, 0}), 3));
  EXPECT_FALSE(in_Aq(alg.monomial({3, 0, 1, 0}), 3));
  EXPECT_THROW(frobenius_order(OqAlgebra(ScalarRing::generic())), std::invalid_argument);
  EXPECT_THROW(frobenius_generator_image(alg, 'x'), std::invalid_argument);
}
