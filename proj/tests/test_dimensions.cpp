#include <gtest/gtest.h>

#include "skein/dimensions.hpp"
#include "skein/oq_sl2.hpp"

using namespace skein;

namespace {

BigInt pow_big(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

TEST(Surface, EulerCharacteristicAndR) {
  EXPECT_EQ(euler_characteristic(SurfaceDescriptor::bigon()), 1);
  EXPECT_EQ(r_of_surface(SurfaceDescriptor::bigon()), 1);
  EXPECT_EQ(euler_characteristic(SurfaceDescriptor::closed(1, 1)), -1);
  EXPECT_EQ(r_of_surface(SurfaceDescriptor::closed(1, 1)), 1);
  EXPECT_EQ(euler_characteristic({1, 0, 3, 2}), -2);
  EXPECT_EQ(r_of_surface({1, 0, 3, 2}), 5);
  EXPECT_EQ(SurfaceDescriptor({0, 0, 2, -1}).circles(), 1u);
  EXPECT_EQ(SurfaceDescriptor::closed(2, 0).circles(), 0u);
}

TEST(Surface, Validation) {
  EXPECT_THROW(SurfaceDescriptor({0, 0, 0, 1}).validate(), std::invalid_argument);
  EXPECT_THROW(SurfaceDescriptor({0, 0, 2, 3}).validate(), std::invalid_argument);
  EXPECT_THROW(k_dimension(SurfaceDescriptor::closed(1, 0), 3), std::invalid_argument);
  EXPECT_THROW(k_dimension(SurfaceDescriptor::bigon(), 4), std::invalid_argument);
}

TEST(Surface, BigonAndBoundaryBounds) {
  EXPECT_EQ(k_dimension(SurfaceDescriptor::bigon(), 3), BigInt(27));
  const auto [lo, hi] = lambda_bounds(SurfaceDescriptor::bigon(), 3);
  EXPECT_EQ(lo, BigInt(27));
  EXPECT_EQ(hi, BigInt(40));
  const SurfaceDescriptor s{1, 2, 3, 2};
  const long r = r_of_surface(s);
  EXPECT_EQ(r, 7);
  const auto [lo5, hi5] = lambda_bounds(s, 5);
  EXPECT_EQ(lo5, pow_big(5, 3 * static_cast<unsigned long>(r)));
  EXPECT_EQ(hi5, pow_big(195, static_cast<unsigned long>(r)));
}

TEST(Surface, ClosedBounds) {
  {
    const auto [lo, hi] = lambda_bounds(SurfaceDescriptor::closed(1, 1), 3);
    EXPECT_EQ(lo, pow_big(3, 3));
    EXPECT_EQ(hi, pow_big(3, 3));
  }
  {
    const auto [lo, hi] = lambda_bounds(SurfaceDescriptor::closed(2, 1), 3);
    EXPECT_EQ(lo, pow_big(3, 9));
    EXPECT_EQ(hi, pow_big(3, 15));
  }
  {
    const auto [lo, hi] = lambda_bounds(SurfaceDescriptor::closed(2, 0), 5);
    EXPECT_EQ(lo, pow_big(5, 6));
    EXPECT_EQ(hi, pow_big(5, 15));
  }
  {
    const auto [lo, hi] = lambda_bounds(SurfaceDescriptor::closed(0, 4), 3);
    EXPECT_EQ(lo, pow_big(3, 6));
    EXPECT_EQ(hi, pow_big(3, 7));
  }
}

TEST(Manifold, ModuleBound) {
  EXPECT_EQ(module_bound({2, 0}, 3), BigInt(27));
  EXPECT_EQ(module_bound({0, 0}, 3), BigInt(1));
  EXPECT_EQ(module_bound({1, 1}, 3), pow_big(40, 2));
  EXPECT_EQ(module_bound({0, 2}, 5), pow_big(195, 1));
  EXPECT_EQ(module_bound({0, 1}, 5), BigInt(1));
  EXPECT_THROW(module_bound({1, 0}, 2), std::invalid_argument);
  EXPECT_THROW(module_bound({30, 0}, 3), std::length_error);
}

TEST(Manifold, AddingAMarkingCanLowerTheBound) {
  // N^{2^6 - 1} = 3^63 exceeds 40^{12} = 40^{2*6+1-1}.
  EXPECT_GT(module_bound({6, 0}, 3), module_bound({6, 1}, 3));
  EXPECT_LT(module_bound({2, 0}, 3), module_bound({2, 1}, 3));
}

TEST(DbCount, MatchesEnumeration) {
  for (unsigned n = 1; n <= 9; n += 2) EXPECT_EQ(db_count_formula(n), BigInt(static_cast<unsigned long>(oq::count_DB(n))));
  for (unsigned n = 1; n <= 15; n += 2) {
    long expect = 2L * n * n * n - static_cast<long>(n) * (n + 1) * (2 * n + 1) / 6;
    EXPECT_EQ(db_count_formula(n), BigInt(expect));
  }
}
