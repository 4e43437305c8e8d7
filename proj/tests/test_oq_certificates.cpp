#include <gtest/gtest.h>

#include "skein/oq_certificates.hpp"
#include "skein/random.hpp"

using namespace skein;
using namespace skein::oq;

namespace {

// Independent re-check of an expression: every key in the allowed set, every
// coefficient in A_q, and the combination equals the target computed by mul.
void expect_expression(const OqAlgebra& alg, const OqElement& target, const std::map<PbwIndex, OqElement>& coeffs,
                       bool allow_b) {
  const unsigned n = frobenius_order(alg);
  OqElement sum = alg.zero();
  for (const auto& [k, c] : coeffs) {
    EXPECT_TRUE(in_D(k, n) || (allow_b && in_B(k, n))) << k.to_string();
    EXPECT_TRUE(in_Aq(c, n)) << c.to_string();
    EXPECT_FALSE(c.is_zero());
    sum += alg.mul(c, alg.monomial(k));
  }
  EXPECT_EQ(sum, target);
}

}  // namespace

TEST(Independence, SimpleCertificate) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  std::map<PbwIndex, OqElement> coeffs;
  coeffs.emplace(PbwIndex(0, 0, 0, 0), alg.one());
  coeffs.emplace(PbwIndex(0, 1, 0, 0), frobenius_generator_image(alg, 'a'));
  const auto cert = independence_certificate(alg, coeffs);
  EXPECT_TRUE(cert.certified);
  EXPECT_TRUE(cert.degrees_distinct);
  EXPECT_TRUE(cert.nonzero);
  ASSERT_EQ(cert.predicted_degree.size(), 1u);
  EXPECT_EQ(cert.predicted_degree, cert.actual_degree);
  EXPECT_EQ(cert.actual_degree[0], deg(combine(alg, coeffs)));
}

TEST(Independence, RejectsBadInput) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  std::map<PbwIndex, OqElement> outside{{PbwIndex(0, 3, 0, 0), alg.one()}};
  EXPECT_THROW(independence_certificate(alg, outside), std::invalid_argument);
  std::map<PbwIndex, OqElement> zero{{PbwIndex(0, 1, 0, 0), alg.zero()}};
  EXPECT_THROW(independence_certificate(alg, zero), std::invalid_argument);
  std::map<PbwIndex, OqElement> not_aq{{PbwIndex(0, 1, 0, 0), alg.generator('a')}};
  EXPECT_THROW(independence_certificate(alg, not_aq), std::invalid_argument);
}

TEST(Independence, RandomMapsAreCertified) {
  for (int n : {3, 5}) {
    const OqAlgebra alg(ScalarRing::root_of_unity(n));
    for (unsigned t = 0; t < 200; ++t) {
      Rng rng = Rng::for_trial(2024, static_cast<std::uint64_t>(n), t);
      const auto coeffs = random_aq_coefficient_map(alg, rng);
      const auto cert = independence_certificate(alg, coeffs);
      ASSERT_TRUE(cert.certified) << cert.detail;
      const OqElement sum = combine(alg, coeffs);
      ASSERT_FALSE(sum.is_zero());
      ASSERT_EQ(cert.actual_degree.at(0), deg(sum));
    }
  }
}

TEST(Localized, MonomialInAqNeedsNoDenominator) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  const auto expr = localized_express(alg, {0, 3, 0, 0});
  EXPECT_EQ(expr.d_power, 0u);
  EXPECT_TRUE(verify_localized(alg, {0, 3, 0, 0}, expr));
  expect_expression(alg, alg.monomial({0, 3, 0, 0}), expr.coeffs, false);
}

TEST(Localized, PositiveAExponentUsesOneDenominator) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  const PbwIndex m(1, 0, 2, 0);
  const auto expr = localized_express(alg, m);
  EXPECT_EQ(expr.d_power, 1u);
  EXPECT_TRUE(verify_localized(alg, m, expr));
  expect_expression(alg, alg.mul(frobenius_generator_image(alg, 'd'), alg.monomial(m)), expr.coeffs, false);
}

TEST(Localized, ExhaustiveSmallBox) {
  for (int n : {3, 5}) {
    const OqAlgebra alg(ScalarRing::root_of_unity(n));
    const OqElement dn = frobenius_generator_image(alg, 'd');
    const unsigned top = static_cast<unsigned>(n) + 1;
    for (unsigned a = 0; a <= top; ++a)
      for (unsigned d = 0; d <= top; ++d)
        for (unsigned b = 0; b <= top; ++b)
          for (unsigned c = 0; c <= top; ++c) {
            const PbwIndex m(a, d, b, c);
            if (!m.in_lambda()) continue;
            const auto expr = localized_express(alg, m);
            ASSERT_LE(expr.d_power, 1u);
            OqElement lhs = alg.monomial(m);
            for (unsigned s = 0; s < expr.d_power; ++s) lhs = alg.mul(dn, lhs);
            expect_expression(alg, lhs, expr.coeffs, false);
          }
  }
}

TEST(SpanningDB, Examples) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  for (const PbwIndex m : {PbwIndex(2, 0, 2, 2), PbwIndex(6, 0, 0, 0), PbwIndex(0, 2, 1, 0), PbwIndex(4, 0, 5, 1)}) {
    const auto coeffs = express_in_DB(alg, m);
    EXPECT_TRUE(verify_DB(alg, m, coeffs)) << m.to_string();
    expect_expression(alg, alg.monomial(m), coeffs, true);
  }
  const auto a6 = express_in_DB(alg, {6, 0, 0, 0});
  ASSERT_EQ(a6.size(), 1u);
  EXPECT_EQ(a6.begin()->first, PbwIndex(0, 0, 0, 0));
}

TEST(SpanningDB, RandomIndices) {
  for (int n : {3, 5}) {
    const OqAlgebra alg(ScalarRing::root_of_unity(n));
    for (unsigned t = 0; t < 60; ++t) {
      Rng rng = Rng::for_trial(7, static_cast<std::uint64_t>(n), t);
      const PbwIndex m = random_lambda_index(rng, 2 * static_cast<std::uint32_t>(n));
      expect_expression(alg, alg.monomial(m), express_in_DB(alg, m), true);
    }
  }
}

TEST(SpanningDB, VerifyRejectsWrongExpression) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  auto coeffs = express_in_DB(alg, {2, 0, 2, 2});
  coeffs.begin()->second = coeffs.begin()->second + alg.one();
  EXPECT_FALSE(verify_DB(alg, {2, 0, 2, 2}, coeffs));
}

TEST(Tensor, ComponentwiseProduct) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  const OqElement a = alg.generator('a'), d = alg.generator('d');
  const TensorElement lhs = tensor_mul(alg, std::vector<OqElement>{a, d}, std::vector<OqElement>{d, a});
  EXPECT_EQ(lhs, tensor_product({alg.mul(a, d), alg.mul(d, a)}));
  EXPECT_EQ(lhs, tensor_mul(alg, tensor_product({a, d}), tensor_product({d, a})));
  EXPECT_EQ(deg(lhs), (IndexTuple{PbwIndex(0, 0, 1, 1), PbwIndex(0, 0, 1, 1)}));
  EXPECT_THROW(tensor_mul(alg, std::vector<OqElement>{a}, std::vector<OqElement>{a, d}), std::invalid_argument);
}

TEST(Tensor, IndependenceOfSquares) {
  const OqAlgebra alg(ScalarRing::root_of_unity(3));
  for (unsigned t = 0; t < 40; ++t) {
    Rng rng = Rng::for_trial(11, 0, t);
    std::map<IndexTuple, TensorElement> coeffs;
    const auto left = random_aq_coefficient_map(alg, rng, 3);
    const auto right = random_aq_coefficient_map(alg, rng, 3);
    for (const auto& [k1, c1] : left)
      for (const auto& [k2, c2] : right) coeffs.emplace(IndexTuple{k1, k2}, tensor_product({c1, c2}));
    const auto cert = tensor_independence_certificate(alg, coeffs);
    ASSERT_TRUE(cert.certified) << cert.detail;
    EXPECT_EQ(cert.predicted_degree, cert.actual_degree);
  }
}
