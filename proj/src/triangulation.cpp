#include "skein/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace skein {

namespace {

// "v2" < "v10"; names without a numeric suffix fall back to plain ordering.
bool puncture_name_less(const std::string& x, const std::string& y) {
  auto split = [](const std::string& s) {
    std::size_t pos = s.size();
    while (pos > 0 && std::isdigit(static_cast<unsigned char>(s[pos - 1]))) --pos;
    return std::make_pair(s.substr(0, pos), s.substr(pos));
  };
  auto [px, nx] = split(x);
  auto [py, ny] = split(y);
  if (px != py || nx.empty() || ny.empty()) return x < y;
  if (nx.size() != ny.size()) return nx.size() < ny.size();
  return nx < ny;
}

}  // namespace

std::size_t Triangulation::puncture_index(const std::string& name) const {
  for (std::size_t i = 0; i < punctures.size(); ++i)
    if (punctures[i].name == name) return i;
  throw TriangulationError("unknown puncture '" + name + "'");
}

void Triangulation::validate() const {
  if (edge_count == 0) throw TriangulationError("triangulation has no edges");
  if (punctures.empty()) throw TriangulationError("triangulation has no punctures");
  std::vector<int> ends(edge_count, 0), sides(edge_count, 0);
  for (const auto& p : punctures) {
    if (p.fan.empty()) throw TriangulationError("fan of " + p.name + " is empty");
    for (std::size_t e : p.fan) {
      if (e >= edge_count) throw TriangulationError("fan of " + p.name + " mentions edge " + std::to_string(e));
      ++ends[e];
    }
  }
  for (const auto& tri : triangles)
    for (std::size_t e : tri) {
      if (e >= edge_count) throw TriangulationError("triangle mentions edge " + std::to_string(e));
      ++sides[e];
    }
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (ends[e] != 2) {
      throw TriangulationError("edge " + std::to_string(e) + " has " + std::to_string(ends[e]) + " ends in the fans");
    }
    if (sides[e] != 2) {
      throw TriangulationError("edge " + std::to_string(e) + " borders " + std::to_string(sides[e]) + " triangle sides");
    }
  }
}

void Triangulation::validate_topology(unsigned genus, unsigned punctures_expected) const {
  validate();
  const long expected = 6L * genus + 3L * punctures_expected - 6;
  if (static_cast<long>(edge_count) != expected) {
    throw TriangulationError("expected " + std::to_string(expected) + " edges for genus " + std::to_string(genus) +
                             " with " + std::to_string(punctures_expected) + " punctures, got " +
                             std::to_string(edge_count));
  }
  if (punctures.size() != punctures_expected) {
    throw TriangulationError("expected " + std::to_string(punctures_expected) + " fans, got " +
                             std::to_string(punctures.size()));
  }
}

Triangulation Triangulation::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw TriangulationError(std::string("triangulation JSON does not parse: ") + e.what());
  }
  Triangulation t;
  try {
    t.edge_count = j.at("edges").get<std::size_t>();
    for (const auto& tri : j.at("triangles")) {
      if (tri.size() != 3) throw TriangulationError("triangle must list exactly three edges");
      t.triangles.push_back({tri[0].get<std::size_t>(), tri[1].get<std::size_t>(), tri[2].get<std::size_t>()});
    }
    for (const auto& [name, fan] : j.at("fans").items()) {
      t.punctures.push_back({name, fan.get<std::vector<std::size_t>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw TriangulationError(std::string("malformed triangulation JSON: ") + e.what());
  }
  std::sort(t.punctures.begin(), t.punctures.end(),
            [](const Puncture& x, const Puncture& y) { return puncture_name_less(x.name, y.name); });
  t.validate();
  return t;
}

Triangulation Triangulation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TriangulationError("cannot open triangulation file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

std::string Triangulation::to_json() const {
  nlohmann::json j;
  j["edges"] = edge_count;
  j["triangles"] = nlohmann::json::array();
  for (const auto& tri : triangles) j["triangles"].push_back({tri[0], tri[1], tri[2]});
  j["fans"] = nlohmann::json::object();
  for (const auto& p : punctures) j["fans"][p.name] = p.fan;
  return j.dump();
}

Triangulation Triangulation::once_punctured_torus() {
  Triangulation t;
  t.edge_count = 3;
  t.triangles = {{0, 1, 2}, {0, 1, 2}};
  t.punctures = {{"v0", {0, 1, 2, 0, 1, 2}}};
  return t;
}

// Tetrahedron: vertices 0..3, edge e = {0-1, 0-2, 0-3, 1-2, 1-3, 2-3}.
Triangulation Triangulation::four_punctured_sphere() {
  Triangulation t;
  t.edge_count = 6;
  t.triangles = {{0, 3, 1}, {0, 4, 2}, {1, 5, 2}, {3, 5, 4}};
  t.punctures = {{"v0", {0, 1, 2}}, {"v1", {0, 4, 3}}, {"v2", {1, 3, 5}}, {"v3", {2, 5, 4}}};
  return t;
}

bool ExchangeMatrix::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (sigma[i][j] != -sigma[j][i]) return false;
  return true;
}

bool ExchangeMatrix::entries_in_range() const {
  for (const auto& row : sigma)
    for (int v : row)
      if (v < -2 || v > 2) return false;
  return true;
}

ExchangeMatrix sigma_from_fans(const Triangulation& t) {
  const std::size_t n = t.edge_count;
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (const auto& p : t.punctures) {
    if (p.fan.empty()) throw TriangulationError("fan of " + p.name + " is empty");
    for (std::size_t k = 0; k < p.fan.size(); ++k) {
      const std::size_t i = p.fan[k], j = p.fan[(k + 1) % p.fan.size()];
      if (i >= n || j >= n) throw TriangulationError("fan of " + p.name + " mentions an unknown edge");
      ++b[i][j];
    }
  }
  ExchangeMatrix m;
  m.sigma.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.sigma[i][j] = b[i][j] - b[j][i];
  if (!m.entries_in_range()) throw TriangulationError("fans produce exchange entries outside {-2,...,2}");
  return m;
}

bool balanced_check(const std::vector<long>& k, const Triangulation& t) {
  if (k.size() != t.edge_count) throw std::invalid_argument("balanced_check: exponent length mismatch");
  return std::all_of(t.triangles.begin(), t.triangles.end(), [&](const auto& tri) {
    return (k[tri[0]] + k[tri[1]] + k[tri[2]]) % 2 == 0;
  });
}

std::vector<long> h_exponent(const Triangulation& t, std::size_t v) {
  if (v >= t.punctures.size()) throw TriangulationError("unknown puncture index " + std::to_string(v));
  std::vector<long> k(t.edge_count, 0);
  for (std::size_t e : t.punctures[v].fan) ++k.at(e);
  return k;
}

}  // namespace skein
