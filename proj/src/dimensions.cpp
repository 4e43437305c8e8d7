#include "skein/dimensions.hpp"

#include <stdexcept>
#include <string>

namespace skein {

namespace {

// Exponents beyond this many bits of output are refused rather than attempted.
constexpr double kMaxResultBits = 1u << 26;

void require_odd(unsigned order) {
  if (order == 0 || order % 2 == 0) {
    throw std::invalid_argument("N must be odd and positive, got " + std::to_string(order));
  }
}

BigInt checked_pow(const BigInt& base, unsigned long exponent) {
  const double bits = static_cast<double>(mpz_sizeinbase(base.get_mpz_t(), 2)) * static_cast<double>(exponent);
  if (base > 1 && bits > kMaxResultBits) throw std::length_error("result has more than 2^26 bits");
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

// 2^e - 1 as an exponent; refuses e that cannot give a representable result.
unsigned long mersenne_exponent(unsigned long e) {
  if (e >= 40) throw std::length_error("exponent 2^" + std::to_string(e) + " - 1 is too large");
  return (1ul << e) - 1;
}

}  // namespace

unsigned SurfaceDescriptor::circles() const {
  if (boundary_circles >= 0) return static_cast<unsigned>(boundary_circles);
  return boundary_intervals > 0 ? 1u : 0u;
}

void SurfaceDescriptor::validate() const {
  const unsigned c = circles();
  if (boundary_intervals == 0 && c != 0) {
    throw std::invalid_argument("boundary circles need at least one boundary puncture");
  }
  if (boundary_intervals > 0 && (c == 0 || c > boundary_intervals)) {
    throw std::invalid_argument("boundary intervals must be distributed over 1.." +
                                std::to_string(boundary_intervals) + " boundary circles");
  }
}

long euler_characteristic(const SurfaceDescriptor& s) {
  s.validate();
  return 2L - 2L * s.genus - static_cast<long>(s.circles()) - static_cast<long>(s.interior_punctures);
}

long r_of_surface(const SurfaceDescriptor& s) { return -euler_characteristic(s) + static_cast<long>(s.boundary_intervals); }

BigInt k_dimension(const SurfaceDescriptor& s, unsigned order) {
  require_odd(order);
  const long chi = euler_characteristic(s);
  if (s.boundary_intervals == 0 && chi >= 0) {
    throw std::invalid_argument("closed surfaces need negative Euler characteristic, got " + std::to_string(chi));
  }
  const long r = r_of_surface(s);
  if (r < 0) throw std::invalid_argument("negative r");
  return checked_pow(BigInt(order), 3ul * static_cast<unsigned long>(r));
}

std::pair<BigInt, BigInt> lambda_bounds(const SurfaceDescriptor& s, unsigned order) {
  require_odd(order);
  const long chi = euler_characteristic(s);
  const BigInt n(order);
  if (s.boundary_intervals > 0) {
    const auto r = static_cast<unsigned long>(r_of_surface(s));
    return {checked_pow(n, 3 * r), checked_pow(db_count_formula(order), r)};
  }
  if (chi >= 0) {
    throw std::invalid_argument("closed surfaces need negative Euler characteristic, got " + std::to_string(chi));
  }
  const unsigned long g = s.genus, p = s.interior_punctures;
  if (p >= 1) return {checked_pow(n, 6 * g + 3 * p - 6), checked_pow(n, mersenne_exponent(2 * g + p - 1))};
  return {checked_pow(n, 6 * g - 6), checked_pow(n, mersenne_exponent(2 * g))};
}

BigInt module_bound(const Marked3ManifoldDescriptor& m, unsigned order) {
  require_odd(order);
  const unsigned long g = m.heegaard_genus, k = m.marking_count;
  if (k == 0) return checked_pow(BigInt(order), mersenne_exponent(g));
  return checked_pow(db_count_formula(order), 2 * g + k - 1);
}

BigInt db_count_formula(unsigned order) {
  require_odd(order);
  const BigInt n(order);
  const BigInt squares = n * (n + 1) * (2 * n + 1);
  if (squares % 6 != 0) throw std::logic_error("sum of squares is not an integer");
  return 2 * n * n * n - squares / 6;
}

}  // namespace skein
