#include "skein/torus_skein.hpp"

#include <set>
#include <stdexcept>

#include "skein/chebyshev.hpp"

namespace skein {

namespace {

void require_odd(unsigned order, const char* what) {
  if (order == 0 || order % 2 == 0) throw std::invalid_argument(std::string(what) + ": N must be odd and positive");
}

}  // namespace

std::vector<Rational> a_basis_expand(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  Polynomial rest = p;
  while (!rest.is_zero() && rest.degree() >= 1) {
    const auto d = static_cast<unsigned>(rest.degree());
    const Rational lead = rest.leading();
    c[d] = lead;
    rest -= chebyshev_A(d) * lead;
  }
  if (!rest.is_zero()) c[0] = rest.coeff(0);
  return c;
}

Polynomial a_basis_resum(const std::vector<Rational>& coeffs) {
  Polynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    p += (i == 0 ? Polynomial::constant(1) : chebyshev_A(static_cast<unsigned>(i))) * coeffs[i];
  }
  return p;
}

std::string S1S2Element::to_string() const {
  std::string s;
  auto append = [&s](const Rational& c, const std::string& name) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + name;
  };
  if (empty_coeff != 0) append(empty_coeff, "empty");
  for (const auto& [i, c] : e_coeffs) append(c, "e_" + std::to_string(i));
  return s.empty() ? "0" : s;
}

S1S2Element s1s2_reduce(const Polynomial& p, unsigned order) {
  require_odd(order, "s1s2_reduce");
  const auto c = a_basis_expand(p);
  S1S2Element out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (i == 0) {
      out.empty_coeff = c[0];
    } else if ((i + 2) % order == 0) {
      out.e_coeffs[static_cast<unsigned>(i)] = c[i];
    }
  }
  return out;
}

Polynomial torus_frobenius(const Polynomial& p, unsigned order) { return compose(p, chebyshev_T(order)); }

Rational FrobeniusMatrix::determinant() const { return skein::determinant(matrix); }

FrobeniusMatrix s1s2_frobenius_matrix(unsigned order, unsigned kmax) {
  require_odd(order, "s1s2_frobenius_matrix");
  if (order < 3) throw std::invalid_argument("s1s2_frobenius_matrix: N must be at least 3");
  if (kmax < 1) throw std::invalid_argument("s1s2_frobenius_matrix: kmax must be at least 1");
  FrobeniusMatrix fm;
  fm.order = order;
  fm.kmax = kmax;
  fm.matrix.assign(kmax + 1, std::vector<Rational>(kmax + 1, Rational(0)));
  fm.matrix[0][0] = 2;
  for (unsigned k = 1; k <= kmax; ++k) {
    const S1S2Element r = s1s2_reduce(chebyshev_T(k * order), order);
    fm.matrix[0][k] = r.empty_coeff;
    for (const auto& [i, c] : r.e_coeffs) {
      if ((i + 2) % order != 0 || (i + 2) / order > kmax) {
        fm.closed = false;
        continue;
      }
      fm.matrix[(i + 2) / order][k] = c;
    }
  }
  return fm;
}

SolidTorusFreeness solid_torus_freeness(unsigned order, unsigned max_degree) {
  require_odd(order, "solid_torus_freeness");
  SolidTorusFreeness result;
  result.spans = true;
  std::set<long> degrees;
  bool distinct = true;
  const Polynomial tn = chebyshev_T(order);
  for (unsigned k = 0; k * order <= max_degree; ++k) {
    const Polynomial tk = tn.pow(k);
    for (unsigned j = 0; j < order; ++j) {
      const long d = (Polynomial::monomial(j) * tk).degree();
      if (d != static_cast<long>(j + k * order) || !degrees.insert(d).second) distinct = false;
    }
  }
  result.independent = distinct;
  for (unsigned m = 0; m <= max_degree; ++m) {
    const Polynomial xm = Polynomial::monomial(m);
    const ChebyshevForm form = chebyshev_reduce(xm, order);
    if (form.columns.size() > order || form.resubstitute() != xm) result.spans = false;
  }
  return result;
}

}  // namespace skein
