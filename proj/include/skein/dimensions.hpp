#pragma once

// Closed-form dimensions and bounds for stated skein algebras of surfaces and
// stated skein modules of marked 3-manifolds at an odd root of unity of order N.

#include <utility>

#include "skein/scalar.hpp"

namespace skein {

/// Punctured bordered surface. Its compact model has genus g and
/// boundary_circles boundary circles; p interior points are removed and the
/// circles are cut into b open intervals by boundary punctures.
struct SurfaceDescriptor {
  unsigned genus = 0;
  unsigned interior_punctures = 0;
  unsigned boundary_intervals = 0;
  /// Defaults to 1 when b > 0 and to 0 when b = 0.
  int boundary_circles = -1;

  unsigned circles() const;
  /// Throws std::invalid_argument for inconsistent data (circles without
  /// intervals, more circles than intervals).
  void validate() const;

  static SurfaceDescriptor bigon() { return {0, 0, 2, 1}; }
  static SurfaceDescriptor closed(unsigned g, unsigned p) { return {g, p, 0, 0}; }
};

struct Marked3ManifoldDescriptor {
  unsigned heegaard_genus = 0;
  unsigned marking_count = 0;
};

/// chi = 2 - 2g - (boundary circles) - p.
long euler_characteristic(const SurfaceDescriptor& s);
/// r = -chi + b.
long r_of_surface(const SurfaceDescriptor& s);

/// N^{3r}. Requires N odd and chi < 0 when b = 0.
BigInt k_dimension(const SurfaceDescriptor& s, unsigned order);

/// Surfaces with boundary: (N^{3r}, (2N^3 - N(N+1)(2N+1)/6)^r).
/// Closed, p >= 1, chi < 0: (N^{6g-6+3p}, N^{2^{2g+p-1}-1}).
/// Closed, p = 0, chi < 0: (N^{6g-6}, N^{2^{2g}-1}).
std::pair<BigInt, BigInt> lambda_bounds(const SurfaceDescriptor& s, unsigned order);

/// k = 0: N^{2^g - 1};  k > 0: (2N^3 - N(N+1)(2N+1)/6)^{2g+k-1}.
BigInt module_bound(const Marked3ManifoldDescriptor& m, unsigned order);

/// 2N^3 - N(N+1)(2N+1)/6.
BigInt db_count_formula(unsigned order);

}  // namespace skein
