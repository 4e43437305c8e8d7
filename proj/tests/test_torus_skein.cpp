#include <gtest/gtest.h>

#include "skein/chebyshev.hpp"
#include "skein/random.hpp"
#include "skein/torus_skein.hpp"

using namespace skein;

namespace {

const Polynomial kX = Polynomial::x();

// A_n as a sum of S_{n-2j}, S built from its own recurrence.
Polynomial a_oracle(unsigned n) {
  std::vector<Polynomial> s{Polynomial{1}, kX};
  for (unsigned i = 2; i <= n; ++i) s.push_back(kX * s[i - 1] - s[i - 2]);
  Polynomial a;
  for (long i = n; i >= 1; i -= 2) a += s[static_cast<std::size_t>(i)];
  return a;
}

S1S2Element element(Rational empty, std::map<unsigned, Rational> e) { return {std::move(empty), std::move(e)}; }

}  // namespace

TEST(ABasis, Examples) {
  EXPECT_EQ(a_basis_expand(kX), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(a_basis_expand(kX * kX), (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(a_basis_expand(chebyshev_T(3)), (std::vector<Rational>{0, -2, 0, 1}));
  EXPECT_TRUE(a_basis_expand(Polynomial()).empty());
  EXPECT_EQ(a_basis_expand(Polynomial{7}), (std::vector<Rational>{7}));
}

TEST(ABasis, MatchesOracleAndIsMonic) {
  for (unsigned n = 1; n <= 20; ++n) {
    const Polynomial a = chebyshev_A(n);
    EXPECT_EQ(a, a_oracle(n)) << n;
    EXPECT_EQ(a.degree(), static_cast<long>(n));
    EXPECT_EQ(a.leading(), Rational(1));
  }
}

TEST(ABasis, RoundTrip) {
  for (unsigned t = 0; t < 50; ++t) {
    Rng rng = Rng::for_trial(12, 0, t);
    const Polynomial p = random_polynomial(rng, static_cast<unsigned>(rng.uniform(0, 20)));
    EXPECT_EQ(a_basis_resum(a_basis_expand(p)), p);
  }
}

TEST(S1S2, ReduceExamples) {
  EXPECT_EQ(s1s2_reduce(kX * kX, 3), element(1, {}));
  EXPECT_EQ(s1s2_reduce(kX, 3), element(0, {{1, 1}}));
  EXPECT_EQ(s1s2_reduce(chebyshev_T(3), 3), element(0, {{1, -2}}));
  EXPECT_EQ(s1s2_reduce(chebyshev_T(10), 5), element(0, {{8, -2}}));
  EXPECT_TRUE(s1s2_reduce(Polynomial(), 3).is_zero());
  EXPECT_THROW(s1s2_reduce(kX, 4), std::invalid_argument);
}

TEST(S1S2, KillRule) {
  for (unsigned n : {3u, 5u, 7u})
    for (unsigned i = 1; i <= 5 * n; ++i) {
      const S1S2Element r = s1s2_reduce(chebyshev_A(i), n);
      if ((i + 2) % n == 0) {
        EXPECT_EQ(r, element(0, {{i, 1}})) << n << " " << i;
      } else {
        EXPECT_TRUE(r.is_zero()) << n << " " << i;
      }
    }
}

TEST(S1S2, TkNReducesToMinusTwoE) {
  for (unsigned n : {3u, 5u, 7u})
    for (unsigned k = 1; k <= 6; ++k)
      EXPECT_EQ(s1s2_reduce(chebyshev_T(k * n), n), element(0, {{k * n - 2, -2}})) << n << " " << k;
}

TEST(Frobenius, MatrixIsDiagonal) {
  for (unsigned n : {3u, 5u})
    for (unsigned kmax = 1; kmax <= 6; ++kmax) {
      const FrobeniusMatrix fm = s1s2_frobenius_matrix(n, kmax);
      ASSERT_TRUE(fm.closed);
      Rational diag = 1;
      for (unsigned i = 0; i <= kmax; ++i)
        for (unsigned j = 0; j <= kmax; ++j) {
          const Rational expect = i != j ? Rational(0) : (i == 0 ? Rational(2) : Rational(-2));
          EXPECT_EQ(fm.matrix[i][j], expect) << i << "," << j;
          if (i == j) diag *= fm.matrix[i][j];
        }
      EXPECT_EQ(fm.determinant(), diag);
      EXPECT_TRUE(fm.invertible());
    }
  EXPECT_EQ(s1s2_frobenius_matrix(3, 6).determinant(), Rational(128));
  EXPECT_THROW(s1s2_frobenius_matrix(1, 3), std::invalid_argument);
  EXPECT_THROW(s1s2_frobenius_matrix(3, 0), std::invalid_argument);
}

TEST(Frobenius, CompositionWithT) {
  for (unsigned n : {3u, 5u})
    for (unsigned m = 0; m <= 8; ++m) EXPECT_EQ(torus_frobenius(chebyshev_T(m), n), chebyshev_T(m * n));
  EXPECT_EQ(torus_frobenius(kX, 3), chebyshev_T(3));
}

TEST(SolidTorus, FreeOverTN) {
  for (unsigned n : {3u, 5u, 7u}) {
    const SolidTorusFreeness f = solid_torus_freeness(n, 4 * n);
    EXPECT_TRUE(f.spans);
    EXPECT_TRUE(f.independent);
  }
}
