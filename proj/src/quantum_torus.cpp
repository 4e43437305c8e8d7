#include "skein/quantum_torus.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skein/parallel.hpp"

namespace skein {

std::string exponent_string(const Exponent& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// QTElement

Scalar QTElement::coefficient(const Exponent& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ring_.zero() : it->second;
}

void QTElement::add_term(const Exponent& k, const Scalar& c) {
  if (k.size() != rank_) throw std::invalid_argument("quantum torus exponent has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QTElement& QTElement::operator+=(const QTElement& rhs) {
  if (!(ring_ == rhs.ring_) || rank_ != rhs.rank_) throw std::invalid_argument("quantum torus element mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

QTElement& QTElement::operator-=(const QTElement& rhs) {
  if (!(ring_ == rhs.ring_) || rank_ != rhs.rank_) throw std::invalid_argument("quantum torus element mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

QTElement QTElement::scaled(const Scalar& c) const {
  QTElement out(ring_, rank_);
  for (const auto& [k, x] : terms_) out.add_term(k, x * c);
  return out;
}

std::string QTElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*Y" + exponent_string(k);
  }
  return s;
}

// ---------------------------------------------------------------------------
// QuantumTorus

QuantumTorus::QuantumTorus(ScalarRing ring, ExchangeMatrix sigma, long param_scale)
    : ring_(std::move(ring)), sigma_(std::move(sigma)), scale_(param_scale) {
  if (!sigma_.is_antisymmetric()) throw std::invalid_argument("exchange matrix is not antisymmetric");
  for (const auto& row : sigma_.sigma)
    if (row.size() != sigma_.size()) throw std::invalid_argument("exchange matrix is not square");
}

Scalar QuantumTorus::mu_power(long e) const { return ring_.q_half_power(scale_ * e); }

QTElement QuantumTorus::one() const { return ordered_monomial(Exponent(rank(), 0)); }

QTElement QuantumTorus::generator(std::size_t i, long exponent) const {
  if (i >= rank()) throw std::invalid_argument("generator index out of range");
  Exponent k(rank(), 0);
  k[i] = exponent;
  return ordered_monomial(k);
}

QTElement QuantumTorus::ordered_monomial(const Exponent& k) const {
  QTElement out = zero();
  out.add_term(k, ring_.one());
  return out;
}

long QuantumTorus::weyl_exponent(const Exponent& k) const {
  if (k.size() != rank()) throw std::invalid_argument("exponent length mismatch");
  long e = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j) e -= k[i] * k[j] * sigma_(i, j);
  return e;
}

long QuantumTorus::pairing(const Exponent& a, const Exponent& b) const {
  if (a.size() != rank() || b.size() != rank()) throw std::invalid_argument("exponent length mismatch");
  long e = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) e += a[i] * b[j] * sigma_(i, j);
  return e;
}

QTElement QuantumTorus::weyl_monomial(const Exponent& k) const {
  QTElement out = zero();
  out.add_term(k, mu_power(weyl_exponent(k)));
  return out;
}

QTElement QuantumTorus::word(const std::vector<std::size_t>& letters) const {
  QTElement out = one();
  for (std::size_t i : letters) out = mul(out, generator(i));
  return out;
}

QTElement QuantumTorus::weyl_word(const std::vector<std::size_t>& letters) const {
  long e = 0;
  for (std::size_t j = 0; j < letters.size(); ++j)
    for (std::size_t l = j + 1; l < letters.size(); ++l) e -= sigma_(letters[j], letters[l]);
  return word(letters).scaled(mu_power(e));
}

void QuantumTorus::check(const QTElement& x) const {
  if (!(x.ring() == ring_) || x.rank() != rank()) throw std::invalid_argument("element does not belong to this torus");
}

// Y_1^a1..Y_n^an * Y_1^b1..Y_n^bn = mu^{2 sum_{i>j} a_i b_j sigma_ij} Y^(a+b) ordered.
void QuantumTorus::accumulate(const QTElement& x, const QTElement& y, std::size_t begin, std::size_t end,
                              QTElement& out) const {
  auto it = x.terms().begin();
  std::advance(it, begin);
  const std::size_t n = rank();
  Exponent sum(n);
  for (std::size_t t = begin; t < end; ++t, ++it) {
    const auto& [a, ca] = *it;
    for (const auto& [b, cb] : y.terms()) {
      long e = 0;
      for (std::size_t i = 1; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < i; ++j) e += a[i] * b[j] * sigma_(i, j);
      }
      for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] + b[i];
      out.add_term(sum, (ca * cb).times_q_half_power(2 * e * scale_));
    }
  }
}

QTElement QuantumTorus::mul(const QTElement& x, const QTElement& y) const {
  check(x);
  check(y);
  QTElement out = zero();
  accumulate(x, y, 0, x.size(), out);
  return out;
}

QTElement QuantumTorus::mul_parallel(const QTElement& x, const QTElement& y) const {
  check(x);
  check(y);
  const int threads = std::max(1, std::min<int>(thread_budget(), static_cast<int>(x.size())));
  std::vector<QTElement> partial(threads, zero());
#pragma omp parallel num_threads(threads)
  {
    const std::size_t t = static_cast<std::size_t>(omp_get_thread_num());
    const std::size_t count = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t begin = x.size() * t / count, end = x.size() * (t + 1) / count;
    accumulate(x, y, begin, end, partial[t]);
  }
  QTElement out = zero();
  for (const auto& part : partial) out += part;
  return out;
}

QTElement QuantumTorus::power(const QTElement& x, unsigned e) const {
  QTElement result = one(), base = x;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool QuantumTorus::commute(const QTElement& x, const QTElement& y) const { return mul(x, y) == mul(y, x); }

// ---------------------------------------------------------------------------

QTElement central_H(const QuantumTorus& torus, const Triangulation& t, std::size_t v) {
  if (v >= t.puncture_count()) throw TriangulationError("unknown puncture index " + std::to_string(v));
  if (t.edge_count != torus.rank()) throw std::invalid_argument("torus rank does not match triangulation");
  return torus.weyl_word(t.punctures[v].fan);
}

QTElement central_H(const QuantumTorus& torus, const Triangulation& t, const std::string& puncture) {
  return central_H(torus, t, t.puncture_index(puncture));
}

QTElement frobenius_qt(const QuantumTorus& nu, const QuantumTorus& mu, unsigned order, const QTElement& x) {
  if (!(nu.ring() == mu.ring())) throw std::invalid_argument("frobenius_qt: tori over different scalar rings");
  if (nu.sigma().sigma != mu.sigma().sigma) throw std::invalid_argument("frobenius_qt: tori with different sigma");
  const long n = order;
  if (nu.param_scale() != n * n * mu.param_scale()) {
    throw std::invalid_argument("frobenius_qt: source parameter is not the N^2 power of the target parameter");
  }
  if (!(x.ring() == nu.ring()) || x.rank() != nu.rank()) {
    throw std::invalid_argument("frobenius_qt: element is not in the source torus");
  }
  QTElement out = mu.zero();
  for (const auto& [k, c] : x.terms()) {
    Exponent nk(k);
    for (auto& e : nk) e *= n;
    // ordered(k) = nu^{-w(k)} Y^k  ->  nu^{-w(k)} mu^{w(Nk)} ordered(Nk)
    out.add_term(nk, c * nu.mu_power(-nu.weyl_exponent(k)) * mu.mu_power(mu.weyl_exponent(nk)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Balanced lattice and Z-basis

Exponent ZBasis::z_vector(std::size_t i) const {
  Exponent k(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r) k[r] = basis(r, i).get_si();
  return k;
}

Exponent ZBasis::coordinates(const Exponent& k) const {
  if (k.size() != basis.rows()) throw std::invalid_argument("coordinates: exponent length mismatch");
  Exponent c(basis.cols());
  for (std::size_t i = 0; i < basis.cols(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < k.size(); ++j) s += inverse[i][j] * k[j];
    if (s.get_den() != 1) throw std::invalid_argument("exponent " + exponent_string(k) + " is not balanced");
    c[i] = s.get_num().get_si();
  }
  return c;
}

Exponent ZBasis::exponent_of(const Exponent& coords) const {
  if (coords.size() != basis.cols()) throw std::invalid_argument("exponent_of: coordinate length mismatch");
  Exponent k(basis.rows(), 0);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    BigInt s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) s += basis(r, i) * coords[i];
    k[r] = s.get_si();
  }
  return k;
}

ZBasis balanced_z_basis(const Triangulation& t) {
  t.validate();
  const std::size_t n = t.edge_count, p = t.puncture_count();
  if (p == 0) throw std::invalid_argument("balanced_z_basis needs at least one puncture");

  std::vector<std::vector<int>> incidence;
  for (const auto& tri : t.triangles) {
    std::vector<int> row(n, 0);
    for (std::size_t e : tri) row[e] ^= 1;
    incidence.push_back(row);
  }
  std::vector<IntVector> generators;
  for (const auto& v : kernel_mod2(incidence, n)) {
    IntVector g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = v[i];
    generators.push_back(g);
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector g(n, BigInt(0));
    g[i] = 2;
    generators.push_back(g);
  }

  ZBasis zb;
  zb.puncture_count = p;
  zb.lattice = lattice_basis(generators, n);
  if (zb.lattice.cols() != n) throw LatticeError("balanced lattice is not of full rank");
  const BigInt lattice_det = abs(determinant(zb.lattice));
  BigInt expected_index;
  mpz_ui_pow_ui(expected_index.get_mpz_t(), 2, rank_mod2(incidence, n));
  if (lattice_det != expected_index) {
    throw LatticeError("balanced lattice index " + lattice_det.get_str() + " differs from 2^rank = " +
                       expected_index.get_str());
  }
  zb.lattice_index = lattice_det;

  std::vector<IntVector> hs;
  for (std::size_t v = 0; v < p; ++v) {
    const Exponent h = h_exponent(t, v);
    if (!balanced_check(h, t)) throw LatticeError("H exponent of puncture " + t.punctures[v].name + " is not balanced");
    hs.emplace_back(h.begin(), h.end());
  }
  zb.basis = complete_to_basis(zb.lattice, hs);

  if (abs(determinant(zb.basis)) != lattice_det) throw LatticeError("completed basis is not unimodular over the lattice");
  for (std::size_t i = 0; i < n; ++i) {
    if (!balanced_check(zb.z_vector(i), t)) throw LatticeError("completed basis vector is not balanced");
  }
  auto inv = rational_inverse(zb.basis);
  if (!inv) throw LatticeError("completed basis is singular");
  zb.inverse = std::move(*inv);
  return zb;
}

QTElement z_monomial(const QuantumTorus& torus, const ZBasis& zb, const Exponent& coords) {
  return torus.weyl_monomial(zb.exponent_of(coords));
}

Exponent grade_of(const ZBasis& zb, const Exponent& k) {
  Exponent c = zb.coordinates(k);
  c.resize(zb.puncture_count);
  return c;
}

Exponent qt_deg(const QTElement& x, const ZBasis& zb) {
  if (x.is_zero()) throw std::domain_error("qt_deg is undefined on zero");
  Exponent best;
  bool first = true;
  for (const auto& term : x.terms()) {
    Exponent g = grade_of(zb, term.first);
    if (first || g > best) best = std::move(g);
    first = false;
  }
  return best;
}

std::map<Exponent, QTElement> grade(const QTElement& x, const ZBasis& zb) {
  std::map<Exponent, QTElement> parts;
  for (const auto& [k, c] : x.terms()) {
    auto it = parts.try_emplace(grade_of(zb, k), x.ring(), x.rank()).first;
    it->second.add_term(k, c);
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Center-freeness certificate

namespace {

Exponent shifted_degree(unsigned order, const Exponent& x, const Exponent& k) {
  Exponent s(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) s[i] = static_cast<long>(order) * x[i] + k[i];
  return s;
}

void fill_distinctness(CenterFreeCertificate& cert, std::vector<std::pair<Exponent, Exponent>> shifted) {
  std::sort(shifted.begin(), shifted.end());
  cert.distinct = true;
  std::ostringstream detail;
  for (std::size_t i = 1; i < shifted.size(); ++i) {
    if (shifted[i].first == shifted[i - 1].first) {
      cert.distinct = false;
      detail << "N x + k collides at " << exponent_string(shifted[i].first) << " for k = "
             << exponent_string(shifted[i - 1].second) << " and " << exponent_string(shifted[i].second) << "; ";
    }
  }
  cert.predicted_degree = shifted.back().first;
  detail << shifted.size() << " shifted degrees, max " << exponent_string(cert.predicted_degree);
  cert.detail = detail.str();
}

}  // namespace

CenterFreeCertificate center_free_certificate(unsigned order, std::size_t p, const std::vector<Exponent>& c0,
                                              const std::map<Exponent, Exponent>& x_map) {
  if (c0.empty()) throw std::invalid_argument("center_free_certificate: empty index set");
  std::vector<std::pair<Exponent, Exponent>> shifted;
  for (const auto& k : c0) {
    if (k.size() != p) throw std::invalid_argument("center_free_certificate: tuple of wrong length");
    auto it = x_map.find(k);
    if (it == x_map.end()) throw std::invalid_argument("center_free_certificate: no degree for " + exponent_string(k));
    if (it->second.size() != p) throw std::invalid_argument("center_free_certificate: degree of wrong length");
    shifted.emplace_back(shifted_degree(order, it->second, k), k);
  }
  CenterFreeCertificate cert;
  fill_distinctness(cert, std::move(shifted));
  cert.certified = cert.distinct;
  return cert;
}

CenterFreeCertificate center_free_certificate(const QuantumTorus& nu, const QuantumTorus& mu, const ZBasis& zb,
                                              unsigned order, const std::map<Exponent, QTElement>& l_map) {
  if (l_map.empty()) throw std::invalid_argument("center_free_certificate: empty index set");
  const std::size_t p = zb.puncture_count;
  std::vector<QTElement> d_factors;  // Z_i + Z_i^{-1}
  for (std::size_t i = 0; i < p; ++i) {
    Exponent e(zb.rank(), 0);
    e[i] = 1;
    QTElement d = z_monomial(mu, zb, e);
    e[i] = -1;
    d += z_monomial(mu, zb, e);
    d_factors.push_back(std::move(d));
  }

  std::vector<std::pair<Exponent, Exponent>> shifted;
  QTElement sum = mu.zero();
  for (const auto& [k, l] : l_map) {
    if (k.size() != p) throw std::invalid_argument("center_free_certificate: tuple of wrong length");
    if (l.is_zero()) throw std::invalid_argument("center_free_certificate: zero element for " + exponent_string(k));
    shifted.emplace_back(shifted_degree(order, qt_deg(l, zb), k), k);
    QTElement term = frobenius_qt(nu, mu, order, l);
    for (std::size_t i = 0; i < p; ++i) {
      if (k[i] < 0) throw std::invalid_argument("center_free_certificate: negative power of Z_i + Z_i^{-1}");
      term = mu.mul(term, mu.power(d_factors[i], static_cast<unsigned>(k[i])));
    }
    sum += term;
  }

  CenterFreeCertificate cert;
  fill_distinctness(cert, std::move(shifted));
  cert.expanded = true;
  cert.nonzero = !sum.is_zero();
  if (cert.nonzero) cert.actual_degree = qt_deg(sum, zb);
  cert.certified = cert.distinct && cert.nonzero && cert.actual_degree == cert.predicted_degree;
  cert.detail += "; expanded sum has " + std::to_string(sum.size()) + " terms, deg " +
                 (cert.nonzero ? exponent_string(cert.actual_degree) : std::string("undefined (zero)"));
  return cert;
}

}  // namespace skein
