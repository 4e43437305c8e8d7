#include "skein/chebyshev.hpp"

#include <stdexcept>

namespace skein {

namespace {

Polynomial recurrence(unsigned n, Polynomial q0, Polynomial q1) {
  if (n == 0) return q0;
  const Polynomial x = Polynomial::x();
  for (unsigned i = 2; i <= n; ++i) {
    Polynomial next = x * q1 - q0;
    q0 = std::move(q1);
    q1 = std::move(next);
  }
  return q1;
}

}  // namespace

Polynomial chebyshev_T(unsigned n) { return recurrence(n, Polynomial{2}, Polynomial::x()); }

Polynomial chebyshev_S(unsigned n) { return recurrence(n, Polynomial{1}, Polynomial::x()); }

Polynomial chebyshev_A(unsigned n) {
  if (n == 0) throw std::invalid_argument("chebyshev_A is defined for n >= 1");
  if (n <= 2) return chebyshev_S(n);
  // A_n = S_n + S_{n-2} + S_{n-4} + ... down to S_1 or S_2
  Polynomial acc;
  for (long k = n; k >= 1; k -= 2) acc += chebyshev_S(static_cast<unsigned>(k));
  return acc;
}

Polynomial ChebyshevForm::resubstitute() const {
  const Polynomial t = chebyshev_T(order);
  Polynomial acc;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    acc += compose(columns[j], t) * Polynomial::monomial(j);
  }
  return acc;
}

ChebyshevForm chebyshev_reduce(const Polynomial& p, unsigned order) {
  if (order == 0 || order % 2 == 0) {
    throw std::invalid_argument("chebyshev_reduce: N must be odd and positive");
  }
  ChebyshevForm form;
  form.order = order;
  form.columns.assign(order, Polynomial());

  const Polynomial t = chebyshev_T(order);
  std::vector<Polynomial> t_powers{Polynomial{1}};
  Polynomial rest = p;
  // Eliminate the top term c x^{kN+j} using the monic T_N^k x^j.
  while (rest.degree() >= static_cast<long>(order)) {
    const auto top = static_cast<std::size_t>(rest.degree());
    const std::size_t k = top / order;
    const std::size_t j = top % order;
    while (t_powers.size() <= k) t_powers.push_back(t_powers.back() * t);
    const Rational c = rest.leading();
    rest -= t_powers[k] * Polynomial::monomial(j, c);
    form.columns[j] += Polynomial::monomial(k, c);
  }
  for (std::size_t j = 0; j < order; ++j) form.columns[j] += Polynomial::constant(rest.coeff(j));
  return form;
}

}  // namespace skein
