#include "skein/oq_certificates.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein::oq {

namespace {

std::string tuple_string(const IndexTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "(x)";
    s += t[i].to_string();
  }
  return s;
}

PbwIndex divided(const PbwIndex& idx, unsigned order) {
  return {idx.a() / order, idx.d() / order, idx.b() / order, idx.c() / order};
}

// O_w = unit * O_{N u} * O_r with r = w mod N entrywise.
struct FrobeniusSplit {
  PbwIndex u;
  PbwIndex residue;
  Scalar unit;
};

FrobeniusSplit split_frobenius(const OqAlgebra& alg, const PbwIndex& w) {
  const unsigned n = frobenius_order(alg);
  const PbwIndex u = divided(w, n);
  const PbwIndex r{w.a() % n, w.d() % n, w.b() % n, w.c() % n};
  const OqElement product = alg.mul_monomials(u.scaled(n), r);
  if (product.size() != 1 || product.terms().begin()->first != w) {
    throw std::logic_error("A_q factor splitting of " + w.to_string() + " is not a monomial multiple");
  }
  return {u, r, product.terms().begin()->second.inverse()};
}

void add_coefficient(std::map<PbwIndex, OqElement>& coeffs, const PbwIndex& k, const OqElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

std::map<PbwIndex, OqElement> express_residue(const OqAlgebra& alg, const PbwIndex& r,
                                              std::map<PbwIndex, std::map<PbwIndex, OqElement>>& memo);

}  // namespace

OqElement combine(const OqAlgebra& alg, const std::map<PbwIndex, OqElement>& coeffs) {
  OqElement sum = alg.zero();
  for (const auto& [k, c] : coeffs) sum += alg.mul(c, alg.monomial(k));
  return sum;
}

IndependenceCertificate independence_certificate(const OqAlgebra& alg, const std::map<PbwIndex, OqElement>& coeffs) {
  const unsigned n = frobenius_order(alg);
  if (coeffs.empty()) throw std::invalid_argument("independence_certificate: empty coefficient map");
  IndexTuple predicted;
  for (const auto& [k, c] : coeffs) {
    if (!in_D(k, n)) throw std::invalid_argument("independence_certificate: " + k.to_string() + " is not in D");
    if (c.is_zero()) throw std::invalid_argument("independence_certificate: zero coefficient at " + k.to_string());
    if (!in_Aq(c, n)) throw std::invalid_argument("independence_certificate: coefficient at " + k.to_string() + " is not in A_q");
    for (const auto& term : c.terms()) predicted.push_back(psi(n, divided(term.first, n), k));
  }
  std::sort(predicted.begin(), predicted.end());

  IndependenceCertificate cert;
  cert.degrees_distinct = std::adjacent_find(predicted.begin(), predicted.end()) == predicted.end();
  cert.predicted_degree = {predicted.back()};
  const OqElement sum = combine(alg, coeffs);
  cert.nonzero = !sum.is_zero();
  if (cert.nonzero) cert.actual_degree = {deg(sum)};
  cert.certified = cert.degrees_distinct && cert.nonzero && cert.actual_degree == cert.predicted_degree;

  std::ostringstream detail;
  detail << predicted.size() << " leading indices, " << (cert.degrees_distinct ? "distinct" : "COLLIDING")
         << "; predicted deg " << tuple_string(cert.predicted_degree) << ", actual "
         << (cert.nonzero ? tuple_string(cert.actual_degree) : std::string("zero sum"));
  cert.detail = detail.str();
  return cert;
}

LocalizedExpression localized_express(const OqAlgebra& alg, const PbwIndex& m) {
  const unsigned n = frobenius_order(alg);
  if (!m.in_lambda()) throw std::invalid_argument("localized_express: " + m.to_string() + " is not in Lambda");
  const FrobeniusSplit split = split_frobenius(alg, m);
  const OqElement outer = alg.monomial(split.u.scaled(n), split.unit);

  LocalizedExpression expr;
  if (split.residue.a() == 0) {
    expr.coeffs.emplace(split.residue, outer);
    return expr;
  }
  // d^N a^v b^x c^y = d^{N-v} (d^v a^v) b^x c^y lands in span{O_w : w_1 = 0}.
  expr.d_power = 1;
  const OqElement shifted = alg.mul(alg.monomial({0, n, 0, 0}), alg.monomial(split.residue));
  for (const auto& [w, coeff] : shifted.terms()) {
    if (w.a() != 0) throw std::logic_error("localized_express: unexpected a-power in " + w.to_string());
    const FrobeniusSplit inner = split_frobenius(alg, w);
    const OqElement aq = alg.mul(outer, alg.monomial(inner.u.scaled(n), coeff * inner.unit));
    add_coefficient(expr.coeffs, inner.residue, aq);
  }
  return expr;
}

bool verify_localized(const OqAlgebra& alg, const PbwIndex& m, const LocalizedExpression& expr) {
  const unsigned n = frobenius_order(alg);
  for (const auto& [k, c] : expr.coeffs) {
    if (!in_D(k, n) || !in_Aq(c, n)) return false;
  }
  const OqElement lhs = alg.mul(alg.monomial({0, n * expr.d_power, 0, 0}), alg.monomial(m));
  return lhs == combine(alg, expr.coeffs);
}

namespace {

std::map<PbwIndex, OqElement> express_residue(const OqAlgebra& alg, const PbwIndex& r,
                                              std::map<PbwIndex, std::map<PbwIndex, OqElement>>& memo) {
  const unsigned n = frobenius_order(alg);
  if (auto it = memo.find(r); it != memo.end()) return it->second;
  std::map<PbwIndex, OqElement> out;
  if (in_D(r, n) || in_B(r, n)) {
    out.emplace(r, alg.one());
    memo.emplace(r, out);
    return out;
  }
  // r = (N-j, 0, x, y) with x, y >= j. From a^N d^j = a^{N-j} (a^j d^j) and
  // right multiplication by b^{x-j} c^{y-j}:
  //   a^N * O_{(0,j,x-j,y-j)} = p O_r + (terms with smaller b, c exponents).
  if (r.d() != 0 || r.a() == 0 || r.a() >= n) throw std::logic_error("express_residue: bad residue " + r.to_string());
  const std::uint32_t j = n - r.a();
  const PbwIndex d_index{0, j, r.b() - j, r.c() - j};
  const OqElement expanded = alg.mul(alg.monomial({n, 0, 0, 0}), alg.monomial(d_index));
  const Scalar lead = expanded.coefficient(r);
  if (lead.is_zero()) throw std::logic_error("express_residue: vanishing leading coefficient at " + r.to_string());
  const Scalar inv = lead.inverse();

  add_coefficient(out, d_index, alg.monomial({n, 0, 0, 0}, inv));
  for (const auto& [w, c] : expanded.terms()) {
    if (w == r) continue;
    const auto sub = express_residue(alg, w, memo);
    const Scalar factor = -(c * inv);
    for (const auto& [k, coeff] : sub) add_coefficient(out, k, coeff.scaled(factor));
  }
  memo.emplace(r, out);
  return out;
}

}  // namespace

std::map<PbwIndex, OqElement> express_in_DB(const OqAlgebra& alg, const PbwIndex& m) {
  const unsigned n = frobenius_order(alg);
  if (!m.in_lambda()) throw std::invalid_argument("express_in_DB: " + m.to_string() + " is not in Lambda");
  const FrobeniusSplit split = split_frobenius(alg, m);
  std::map<PbwIndex, std::map<PbwIndex, OqElement>> memo;
  const auto residue = express_residue(alg, split.residue, memo);
  const OqElement outer = alg.monomial(split.u.scaled(n), split.unit);
  std::map<PbwIndex, OqElement> out;
  for (const auto& [k, c] : residue) add_coefficient(out, k, alg.mul(outer, c));
  return out;
}

bool verify_DB(const OqAlgebra& alg, const PbwIndex& m, const std::map<PbwIndex, OqElement>& coeffs) {
  const unsigned n = frobenius_order(alg);
  for (const auto& [k, c] : coeffs) {
    if (!(in_D(k, n) || in_B(k, n)) || !in_Aq(c, n)) return false;
  }
  return alg.monomial(m) == combine(alg, coeffs);
}

// ---------------------------------------------------------------------------

void TensorElement::add_term(const IndexTuple& idx, const Scalar& c) {
  if (idx.size() != arity_) throw std::invalid_argument("tensor index arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  if (rhs.arity_ != arity_ || rhs.ring_ != ring_) throw std::invalid_argument("tensor element mismatch");
  for (const auto& [idx, c] : rhs.terms_) add_term(idx, c);
  return *this;
}

TensorElement tensor_product(const std::vector<OqElement>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_product needs at least one factor");
  TensorElement out(factors.front().ring(), factors.size());
  std::vector<std::pair<IndexTuple, Scalar>> partial{{IndexTuple{}, factors.front().ring().one()}};
  for (const auto& f : factors) {
    std::vector<std::pair<IndexTuple, Scalar>> next;
    for (const auto& [tuple, c] : partial)
      for (const auto& [idx, x] : f.terms()) {
        IndexTuple t = tuple;
        t.push_back(idx);
        next.emplace_back(std::move(t), c * x);
      }
    partial = std::move(next);
  }
  for (const auto& [tuple, c] : partial) out.add_term(tuple, c);
  return out;
}

TensorElement tensor_mul(const OqAlgebra& alg, const TensorElement& x, const TensorElement& y) {
  if (x.arity() != y.arity()) throw std::invalid_argument("tensor_mul: arity mismatch");
  TensorElement out(alg.ring(), x.arity());
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) {
      std::vector<OqElement> components;
      components.reserve(tx.size());
      for (std::size_t i = 0; i < tx.size(); ++i) components.push_back(alg.mul_monomials(tx[i], ty[i]));
      TensorElement prod = tensor_product(components);
      const Scalar c = cx * cy;
      for (const auto& [idx, v] : prod.terms()) out.add_term(idx, v * c);
    }
  return out;
}

TensorElement tensor_mul(const OqAlgebra& alg, const std::vector<OqElement>& xs, const std::vector<OqElement>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("tensor_mul: arity mismatch (" + std::to_string(xs.size()) + " vs " +
                                std::to_string(ys.size()) + ")");
  }
  std::vector<OqElement> products;
  products.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) products.push_back(alg.mul(xs[i], ys[i]));
  return tensor_product(products);
}

IndexTuple deg(const TensorElement& x) {
  if (x.is_zero()) throw std::domain_error("deg is undefined on the zero tensor");
  return x.terms().rbegin()->first;
}

IndependenceCertificate tensor_independence_certificate(const OqAlgebra& alg,
                                                        const std::map<IndexTuple, TensorElement>& coeffs) {
  const unsigned n = frobenius_order(alg);
  if (coeffs.empty()) throw std::invalid_argument("tensor_independence_certificate: empty coefficient map");
  const std::size_t arity = coeffs.begin()->first.size();
  std::vector<IndexTuple> predicted;
  TensorElement sum(alg.ring(), arity);
  for (const auto& [ks, c] : coeffs) {
    if (ks.size() != arity || c.arity() != arity) throw std::invalid_argument("tensor certificate: arity mismatch");
    if (c.is_zero()) throw std::invalid_argument("tensor certificate: zero coefficient");
    std::vector<OqElement> basis;
    for (const auto& k : ks) {
      if (!in_D(k, n)) throw std::invalid_argument("tensor certificate: " + k.to_string() + " is not in D");
      basis.push_back(alg.monomial(k));
    }
    for (const auto& [vs, x] : c.terms()) {
      IndexTuple degrees;
      for (std::size_t i = 0; i < arity; ++i) {
        const auto& comp = vs[i].k;
        if (std::any_of(comp.begin(), comp.end(), [n](std::uint32_t e) { return e % n != 0; })) {
          throw std::invalid_argument("tensor certificate: coefficient is not in A_q^(x)r");
        }
        degrees.push_back(psi(n, divided(vs[i], n), ks[i]));
      }
      predicted.push_back(std::move(degrees));
    }
    sum += tensor_mul(alg, c, tensor_product(basis));
  }
  std::sort(predicted.begin(), predicted.end());

  IndependenceCertificate cert;
  cert.degrees_distinct = std::adjacent_find(predicted.begin(), predicted.end()) == predicted.end();
  cert.predicted_degree = predicted.back();
  cert.nonzero = !sum.is_zero();
  if (cert.nonzero) cert.actual_degree = deg(sum);
  cert.certified = cert.degrees_distinct && cert.nonzero && cert.actual_degree == cert.predicted_degree;
  std::ostringstream detail;
  detail << predicted.size() << " leading tuples, " << (cert.degrees_distinct ? "distinct" : "COLLIDING")
         << "; predicted deg " << tuple_string(cert.predicted_degree) << ", actual "
         << (cert.nonzero ? tuple_string(cert.actual_degree) : std::string("zero sum"));
  cert.detail = detail.str();
  return cert;
}

}  // namespace skein::oq
