#include "skein/oq_sl2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skein/parallel.hpp"

namespace skein::oq {

std::string PbwIndex::to_string() const {
  std::ostringstream out;
  out << "(" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// OqElement

Scalar OqElement::coefficient(const PbwIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? ring_.zero() : it->second;
}

void OqElement::add_term(const PbwIndex& idx, const Scalar& c) {
  if (!idx.in_lambda()) throw std::invalid_argument("index " + idx.to_string() + " is not in the PBW index set");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

OqElement& OqElement::operator+=(const OqElement& rhs) {
  if (ring_ != rhs.ring_) throw std::invalid_argument("OqElement ring mismatch");
  for (const auto& [idx, c] : rhs.terms_) add_term(idx, c);
  return *this;
}

OqElement& OqElement::operator-=(const OqElement& rhs) {
  if (ring_ != rhs.ring_) throw std::invalid_argument("OqElement ring mismatch");
  for (const auto& [idx, c] : rhs.terms_) add_term(idx, -c);
  return *this;
}

OqElement OqElement::operator-() const {
  OqElement out(ring_);
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

OqElement OqElement::scaled(const Scalar& c) const {
  OqElement out(ring_);
  if (c.is_zero()) return out;
  for (const auto& [idx, x] : terms_) out.terms_.emplace(idx, x * c);
  return out;
}

std::string OqElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << it->second.to_string() << ")*O" << it->first.to_string();
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// OqAlgebra

OqElement OqAlgebra::monomial(const PbwIndex& idx, const Scalar& coeff) const {
  OqElement out(ring_);
  out.add_term(idx, coeff);
  return out;
}

OqElement OqAlgebra::generator(char g) const {
  switch (g) {
    case 'a': return monomial({1, 0, 0, 0});
    case 'd': return monomial({0, 1, 0, 0});
    case 'b': return monomial({0, 0, 1, 0});
    case 'c': return monomial({0, 0, 0, 1});
    default: throw std::invalid_argument(std::string("unknown generator '") + g + "'");
  }
}

OqElement OqAlgebra::ordered_product(const PbwIndex& k) const {
  const OqElement ad = mul_monomials({k.a(), 0, 0, 0}, {0, k.d(), 0, 0});
  return mul(ad, monomial({0, 0, k.b(), k.c()}));
}

const std::vector<Scalar>& OqAlgebra::cached_polynomial(std::deque<std::vector<Scalar>>& cache, unsigned n,
                                                        int sign) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (cache.empty()) cache.push_back({ring_.one()});
  while (cache.size() <= n) {
    const unsigned i = static_cast<unsigned>(cache.size());
    // multiply by (1 + q^{e} u), e = 2 - 4i (sign < 0) or 4i - 2 (sign > 0)
    const long e = sign < 0 ? 2 - 4L * i : 4L * i - 2;
    const std::vector<Scalar>& prev = cache.back();
    std::vector<Scalar> next(prev.size() + 1, ring_.zero());
    const Scalar factor = ring_.q_power(e);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j] += prev[j];
      next[j + 1] += prev[j] * factor;
    }
    cache.push_back(std::move(next));
  }
  return cache[n];
}

const std::vector<Scalar>& OqAlgebra::ad_polynomial(unsigned n) const { return cached_polynomial(ad_cache_, n, -1); }

const std::vector<Scalar>& OqAlgebra::da_polynomial(unsigned n) const { return cached_polynomial(da_cache_, n, +1); }

// (a^k1 d^k2 b^k3 c^k4)(a^l1 d^l2 b^l3 c^l4):
//   1. move b^k3 c^k4 right past a^l1 d^l2, picking up q^{2(k3+k4)(l1-l2)};
//   2. rewrite the middle a^k1 d^k2 a^l1 d^l2 as sum_i coeff_i X u^i with X a
//      pure a- or d-power and u = bc, using u a = q^4 a u and u d = q^-4 d u;
//   3. absorb u^i into the trailing b, c powers (b and c commute).
void OqAlgebra::accumulate_product(const PbwIndex& x, const PbwIndex& y, const Scalar& coeff, OqElement& out) const {
  const long shift = 2L * (x.b() + x.c()) * (static_cast<long>(y.a()) - static_cast<long>(y.d()));
  const std::uint32_t b = x.b() + y.b();
  const std::uint32_t c = x.c() + y.c();
  const Scalar base = coeff.times_q_half_power(2 * shift);

  auto emit = [&](std::uint32_t a_exp, std::uint32_t d_exp, std::uint32_t i, const Scalar& poly_coeff, long q_exp) {
    Scalar term = base * poly_coeff;
    if (q_exp != 0) term = term.times_q_half_power(2 * q_exp);
    out.add_term({a_exp, d_exp, b + i, c + i}, term);
  };

  if (x.d() == 0) {
    // a^A d^D
    const std::uint32_t a_exp = x.a() + y.a();
    const std::uint32_t d_exp = y.d();
    if (a_exp >= d_exp) {
      const auto& p = ad_polynomial(d_exp);
      for (std::uint32_t i = 0; i <= d_exp; ++i) emit(a_exp - d_exp, 0, i, p[i], 0);
    } else {
      const std::uint32_t r = d_exp - a_exp;
      const auto& p = ad_polynomial(a_exp);
      for (std::uint32_t i = 0; i <= a_exp; ++i) emit(0, r, i, p[i], -4L * r * i);
    }
    return;
  }
  if (y.a() == 0) {
    emit(0, x.d() + y.d(), 0, ring_.one(), 0);
    return;
  }
  // d^n a^m
  const std::uint32_t n = x.d();
  const std::uint32_t m = y.a();
  if (n >= m) {
    const auto& p = da_polynomial(m);
    for (std::uint32_t i = 0; i <= m; ++i) emit(0, n - m, i, p[i], 0);
  } else {
    const std::uint32_t r = m - n;
    const auto& p = da_polynomial(n);
    for (std::uint32_t i = 0; i <= n; ++i) emit(r, 0, i, p[i], 4L * r * i);
  }
}

OqElement OqAlgebra::mul_monomials(const PbwIndex& x, const PbwIndex& y) const {
  if (!x.in_lambda() || !y.in_lambda()) throw std::invalid_argument("mul_monomials: indices must be in Lambda");
  OqElement out(ring_);
  accumulate_product(x, y, ring_.one(), out);
  return out;
}

OqElement OqAlgebra::mul(const OqElement& x, const OqElement& y) const {
  if (x.ring() != ring_ || y.ring() != ring_) throw std::invalid_argument("OqAlgebra::mul ring mismatch");
  OqElement out(ring_);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) accumulate_product(kx, ky, cx * cy, out);
  return out;
}

OqElement OqAlgebra::mul_parallel(const OqElement& x, const OqElement& y) const {
  if (x.ring() != ring_ || y.ring() != ring_) throw std::invalid_argument("OqAlgebra::mul ring mismatch");
  std::vector<std::pair<PbwIndex, Scalar>> left(x.terms().begin(), x.terms().end());
  const int threads = thread_budget();
  std::vector<OqElement> partial(static_cast<std::size_t>(threads), OqElement(ring_));
  const long n = static_cast<long>(left.size());
#pragma omp parallel num_threads(threads)
  {
    OqElement& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      const auto& [kx, cx] = left[static_cast<std::size_t>(i)];
      for (const auto& [ky, cy] : y.terms()) accumulate_product(kx, ky, cx * cy, acc);
    }
  }
  OqElement out(ring_);
  for (const auto& p : partial) out += p;
  return out;
}

OqElement OqAlgebra::power(const OqElement& x, unsigned e) const {
  OqElement result = one();
  OqElement base = x;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e) base = mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Rewriting engine

namespace {

struct Rule {
  long q_exp;
  const char* rhs;
};

// Redexes: out-of-order pairs plus the forbidden mixed pair "ad".
const std::vector<Rule>* rules_for(char x, char y) {
  static const std::vector<Rule> da{{0, ""}, {2, "bc"}};
  static const std::vector<Rule> ad{{0, ""}, {-2, "bc"}};
  static const std::vector<Rule> ba{{2, "ab"}};
  static const std::vector<Rule> ca{{2, "ac"}};
  static const std::vector<Rule> bd{{-2, "db"}};
  static const std::vector<Rule> cd{{-2, "dc"}};
  static const std::vector<Rule> cb{{0, "bc"}};
  switch (x) {
    case 'a': return y == 'd' ? &ad : nullptr;
    case 'd': return y == 'a' ? &da : nullptr;
    case 'b': return y == 'a' ? &ba : y == 'd' ? &bd : nullptr;
    case 'c': return y == 'a' ? &ca : y == 'd' ? &cd : y == 'b' ? &cb : nullptr;
    default: throw std::invalid_argument(std::string("unknown generator '") + x + "'");
  }
}

PbwIndex index_of_normal_word(const std::string& w) {
  PbwIndex idx;
  const std::string order = "adbc";
  std::size_t stage = 0;
  for (char ch : w) {
    const std::size_t pos = order.find(ch);
    if (pos == std::string::npos) throw std::invalid_argument(std::string("unknown generator '") + ch + "'");
    if (pos < stage) throw std::logic_error("word '" + w + "' is not in normal form");
    stage = pos;
    ++idx.k[pos];
  }
  return idx;
}

}  // namespace

OqElement OqAlgebra::normal_form(std::string_view word, Strategy strategy) const {
  return normal_form({{ring_.one(), std::string(word)}}, strategy);
}

OqElement OqAlgebra::normal_form(const std::vector<std::pair<Scalar, std::string>>& combination,
                                 Strategy strategy) const {
  std::map<std::string, Scalar> pending;
  auto push = [&pending](const std::string& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  };
  for (const auto& [c, w] : combination) {
    for (char ch : w) rules_for(ch, 'a');  // validates the alphabet
    push(w, c);
  }

  OqElement out(ring_);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const Scalar& c = node.mapped();

    std::size_t redex = std::string::npos;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (rules_for(w[i], w[i + 1])) {
        redex = i;
        if (strategy == Strategy::Leftmost) break;
      }
    }
    if (redex == std::string::npos) {
      out.add_term(index_of_normal_word(w), c);
      continue;
    }
    const auto& rules = *rules_for(w[redex], w[redex + 1]);
    const std::string head = w.substr(0, redex);
    const std::string tail = w.substr(redex + 2);
    for (const auto& rule : rules) push(head + rule.rhs + tail, c.times_q_half_power(2 * rule.q_exp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degrees, index sets and A_q

PbwIndex deg(const OqElement& x) {
  if (x.is_zero()) throw std::domain_error("deg is undefined on the zero element");
  return x.terms().rbegin()->first;
}

PbwIndex phi(const PbwIndex& k) {
  const auto [k1, k2, k3, k4] = k.k;
  if (k1 == k2) return {0, 0, k3 + k1, k4 + k2};
  if (k1 > k2) return {k1 - k2, 0, k3 + k2, k4 + k2};
  return {0, k2 - k1, k3 + k1, k4 + k1};
}

bool in_D(const PbwIndex& idx, unsigned order) {
  return idx.a() == 0 && idx.d() < order && idx.b() < order && idx.c() < order;
}

bool in_B(const PbwIndex& idx, unsigned order) {
  if (idx.d() != 0 || idx.a() == 0 || idx.a() >= order) return false;
  const std::uint32_t j = order - idx.a();
  return idx.b() < order && idx.c() < order && (idx.b() < j || idx.c() < j);
}

std::vector<PbwIndex> enumerate_D(unsigned order) {
  std::vector<PbwIndex> out;
  out.reserve(static_cast<std::size_t>(order) * order * order);
  for (std::uint32_t k2 = 0; k2 < order; ++k2)
    for (std::uint32_t k3 = 0; k3 < order; ++k3)
      for (std::uint32_t k4 = 0; k4 < order; ++k4) out.push_back({0, k2, k3, k4});
  return out;
}

std::vector<PbwIndex> enumerate_B(unsigned order) {
  // Literal set comprehension; duplicates cannot occur since (j, k2, k3) -> index is injective.
  std::vector<PbwIndex> out;
  for (std::uint32_t j = 1; j < order; ++j)
    for (std::uint32_t k2 = 0; k2 < order; ++k2)
      for (std::uint32_t k3 = 0; k3 < order; ++k3)
        if (k2 < j || k3 < j) out.push_back({order - j, 0, k2, k3});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_D(unsigned order) { return enumerate_D(order).size(); }

std::size_t count_DB(unsigned order) {
  std::vector<PbwIndex> all = enumerate_D(order);
  const auto b = enumerate_B(order);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all.size();
}

PbwIndex psi(unsigned order, const PbwIndex& u, const PbwIndex& v) {
  if (!u.in_lambda()) throw std::invalid_argument("psi: u = " + u.to_string() + " is not in Lambda");
  if (!in_D(v, order)) throw std::invalid_argument("psi: v = " + v.to_string() + " is not in D");
  return phi(u.scaled(order) + v);
}

DegreePair deg_of_monomial(const OqAlgebra& alg, const PbwIndex& k) {
  return {phi(k), deg(alg.ordered_product(k))};
}

bool is_in_E(const OqElement& x, unsigned t, ETopCoefficient rule) {
  if (t == 0) return x.size() == 1 && x.coefficient({0, 0, 0, 0}).is_one();
  for (const auto& [idx, c] : x.terms()) {
    if (idx.a() != 0 || idx.d() != 0 || idx.b() != idx.c() || idx.b() > t) return false;
  }
  if (!x.coefficient({0, 0, 0, 0}).is_one()) return false;
  const Scalar top = x.coefficient({0, 0, t, t});
  long e = 0;
  if (!top.is_q_half_monomial(rule == ETopCoefficient::SignedQPower, &e)) return false;
  // In Generic mode the exponent of q^{1/2} must be even; at odd N every power of zeta is a power of q.
  return x.ring().is_root_of_unity() || e % 2 == 0;
}

unsigned frobenius_order(const OqAlgebra& alg) {
  if (!alg.ring().is_root_of_unity()) {
    throw std::invalid_argument("the Frobenius subalgebra needs a root-of-unity scalar ring");
  }
  return static_cast<unsigned>(alg.ring().order());
}

OqElement frobenius_generator_image(const OqAlgebra& alg, char g) {
  const unsigned n = frobenius_order(alg);
  switch (g) {
    case 'a': return alg.monomial({n, 0, 0, 0});
    case 'd': return alg.monomial({0, n, 0, 0});
    case 'b': return alg.monomial({0, 0, n, 0});
    case 'c': return alg.monomial({0, 0, 0, n});
    default: throw std::invalid_argument(std::string("unknown generator '") + g + "'");
  }
}

OqElement aq_monomial(const OqAlgebra& alg, const PbwIndex& v) {
  if (!v.in_lambda()) throw std::invalid_argument("aq_monomial: " + v.to_string() + " is not in Lambda");
  return alg.monomial(v.scaled(frobenius_order(alg)));
}

bool in_Aq(const OqElement& x, unsigned order) {
  return std::all_of(x.terms().begin(), x.terms().end(), [order](const auto& term) {
    const auto& k = term.first.k;
    return std::all_of(k.begin(), k.end(), [order](std::uint32_t e) { return e % order == 0; });
  });
}

}  // namespace skein::oq
