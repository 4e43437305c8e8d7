#pragma once

// Combinatorial ideal triangulations of punctured surfaces: edges, triangles
// (as edge triples) and, for each puncture, the cyclic counterclockwise
// sequence of edge-ends around it.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

struct TriangulationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Puncture {
  std::string name;
  std::vector<std::size_t> fan;
};

struct Triangulation {
  std::size_t edge_count = 0;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<Puncture> punctures;

  std::size_t puncture_count() const { return punctures.size(); }
  /// Index of the named puncture; throws TriangulationError if absent.
  std::size_t puncture_index(const std::string& name) const;

  /// Throws TriangulationError unless every index is in range, every edge
  /// has exactly two ends among the fans and borders exactly two triangle sides.
  void validate() const;
  /// validate() plus n = 6g + 3p - 6 and p = number of fans.
  void validate_topology(unsigned genus, unsigned punctures) const;

  static Triangulation from_json(const std::string& text);
  static Triangulation load(const std::string& path);
  std::string to_json() const;

  static Triangulation once_punctured_torus();
  static Triangulation four_punctured_sphere();
};

/// Antisymmetric exchange matrix sigma = b - b^T.
struct ExchangeMatrix {
  std::vector<std::vector<int>> sigma;

  std::size_t size() const { return sigma.size(); }
  int operator()(std::size_t i, std::size_t j) const { return sigma[i][j]; }
  bool is_antisymmetric() const;
  bool entries_in_range() const;  // all entries in {-2, ..., 2}
};

/// b_ij counts cyclically consecutive pairs (end of e_i, then end of e_j)
/// over all fans. Throws TriangulationError on malformed fans.
ExchangeMatrix sigma_from_fans(const Triangulation& t);

/// For every triangle with edges i1, i2, i3: k_i1 + k_i2 + k_i3 is even.
bool balanced_check(const std::vector<long>& k, const Triangulation& t);

/// Multiplicity of each edge in the fan of puncture v.
std::vector<long> h_exponent(const Triangulation& t, std::size_t v);

}  // namespace skein
