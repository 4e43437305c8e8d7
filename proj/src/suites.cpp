#include "skein/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skein/chebyshev.hpp"
#include "skein/dimensions.hpp"
#include "skein/oq_certificates.hpp"
#include "skein/parallel.hpp"
#include "skein/quantum_torus.hpp"
#include "skein/random.hpp"
#include "skein/torus_skein.hpp"

namespace skein {

using oq::OqAlgebra;
using oq::OqElement;
using oq::PbwIndex;

CheckOutcome TrialSummary::outcome(const std::string& what) const {
  std::ostringstream s;
  s << passed << "/" << (passed + failed) << " " << what;
  if (failed) s << "; first failure: " << first_failure;
  return {ok(), s.str()};
}

TrialSummary run_trials(std::size_t count, ExecutionMode mode,
                        const std::function<std::optional<std::string>(std::size_t)>& trial) {
  std::vector<std::optional<std::string>> results(count);
  auto body = [&](std::size_t i) {
    try {
      results[i] = trial(i);
    } catch (const std::exception& e) {
      results[i] = "trial " + std::to_string(i) + " threw: " + e.what();
    }
  };
  if (mode == ExecutionMode::Parallel) {
    parallel_for(count, body);
  } else {
    serial_for(count, body);
  }
  TrialSummary summary;
  for (const auto& r : results) {
    if (!r) {
      ++summary.passed;
    } else if (summary.failed++ == 0) {
      summary.first_failure = *r;
    }
  }
  return summary;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bigon", "chebyshev", "counts", "qtorus", "torus-skein"};
  return names;
}

namespace {

// Stream identifiers keep the random draws of different checks independent.
enum Stream : std::uint64_t {
  kWords = 1,
  kIndependence,
  kLocalized,
  kSpanning,
  kTensor,
  kParallelProduct,
  kQtWeyl,
  kQtFrobenius,
  kQtDegree,
  kQtBalanced,
  kQtCenterFree,
  kChebyshevReduce,
};

std::optional<std::string> failure(const std::string& s) { return s; }

std::string random_word(Rng& rng, long max_len) {
  static const char letters[] = {'a', 'b', 'c', 'd'};
  std::string w;
  const long len = rng.uniform(1, max_len);
  for (long i = 0; i < len; ++i) w += letters[rng.uniform(0, 3)];
  return w;
}

OqElement word_product(const OqAlgebra& alg, const std::string& w) {
  OqElement x = alg.one();
  for (char g : w) x = alg.mul(x, alg.generator(g));
  return x;
}

// ---------------------------------------------------------------------------
// bigon

CheckOutcome check_defining_relations(const OqAlgebra& alg) {
  const ScalarRing& R = alg.ring();
  auto g = [&](char c) { return alg.generator(c); };
  struct Relation {
    const char* name;
    OqElement lhs, rhs;
  };
  const std::vector<Relation> relations{
      {"ca=q^2 ac", alg.mul(g('c'), g('a')), alg.mul(g('a'), g('c')).scaled(R.q_power(2))},
      {"db=q^2 bd", alg.mul(g('d'), g('b')), alg.mul(g('b'), g('d')).scaled(R.q_power(2))},
      {"ba=q^2 ab", alg.mul(g('b'), g('a')), alg.mul(g('a'), g('b')).scaled(R.q_power(2))},
      {"dc=q^2 cd", alg.mul(g('d'), g('c')), alg.mul(g('c'), g('d')).scaled(R.q_power(2))},
      {"bc=cb", alg.mul(g('b'), g('c')), alg.mul(g('c'), g('b'))},
      {"ad-q^-2 bc=1", alg.mul(g('a'), g('d')) - alg.mul(g('b'), g('c')).scaled(R.q_power(-2)), alg.one()},
      {"da-q^2 cb=1", alg.mul(g('d'), g('a')) - alg.mul(g('c'), g('b')).scaled(R.q_power(2)), alg.one()},
  };
  std::string bad;
  for (const auto& r : relations) {
    if (r.lhs != r.rhs) bad += std::string(bad.empty() ? "" : ", ") + r.name;
  }
  return {bad.empty(), bad.empty() ? "7 relations hold over " + R.describe() : "violated: " + bad};
}

std::vector<PbwIndex> lambda_box(std::uint32_t bound) {
  std::vector<PbwIndex> out;
  for (std::uint32_t a = 0; a <= bound; ++a)
    for (std::uint32_t d = 0; d <= bound; ++d)
      for (std::uint32_t b = 0; b <= bound; ++b)
        for (std::uint32_t c = 0; c <= bound; ++c) {
          PbwIndex k{a, d, b, c};
          if (k.in_lambda()) out.push_back(k);
        }
  return out;
}

CheckOutcome check_deg_equals_phi(const OqAlgebra& alg, std::uint32_t bound, ExecutionMode mode) {
  std::vector<PbwIndex> all;
  for (std::uint32_t a = 0; a <= bound; ++a)
    for (std::uint32_t d = 0; d <= bound; ++d)
      for (std::uint32_t b = 0; b <= bound; ++b)
        for (std::uint32_t c = 0; c <= bound; ++c) all.push_back({a, d, b, c});
  const TrialSummary s = run_trials(all.size(), mode, [&](std::size_t i) -> std::optional<std::string> {
    const oq::DegreePair p = oq::deg_of_monomial(alg, all[i]);
    if (p.agree()) return std::nullopt;
    return failure("k=" + all[i].to_string() + ": phi " + p.via_phi.to_string() + " vs normal form " +
                   p.via_normal_form.to_string());
  });
  return s.outcome("quadruples with entries <= " + std::to_string(bound) + " agree");
}

CheckOutcome check_e_structure(const OqAlgebra& alg, unsigned tmax) {
  for (unsigned t = 0; t <= tmax; ++t) {
    const OqElement x = alg.ordered_product({t, t, 0, 0});
    if (!oq::is_in_E(x, t)) return {false, "a^" + std::to_string(t) + " d^" + std::to_string(t) + " is not in E_t"};
  }
  return {true, "a^t d^t in E_t for 0 <= t <= " + std::to_string(tmax) + " over " + alg.ring().describe()};
}

CheckOutcome check_aq_central(const OqAlgebra& alg) {
  const std::string gens = "abcd";
  for (char x : gens) {
    const OqElement fx = oq::frobenius_generator_image(alg, x);
    for (char y : gens) {
      const OqElement g = alg.generator(y);
      if (alg.mul(fx, g) != alg.mul(g, fx)) return {false, std::string(1, x) + "^N does not commute with " + y};
      const OqElement fy = oq::frobenius_generator_image(alg, y);
      if (alg.mul(fx, fy) != alg.mul(fy, fx)) return {false, std::string(1, x) + "^N and " + y + "^N do not commute"};
    }
  }
  return {true, "a^N, b^N, c^N, d^N pairwise commute and are central"};
}

CheckOutcome check_psi_injective(unsigned n, std::uint32_t u_bound) {
  std::set<PbwIndex> seen;
  std::size_t total = 0;
  for (const auto& u : lambda_box(u_bound))
    for (const auto& v : oq::enumerate_D(n)) {
      ++total;
      if (!seen.insert(oq::psi(n, u, v)).second) {
        return {false, "psi collides at u=" + u.to_string() + ", v=" + v.to_string()};
      }
    }
  return {true, std::to_string(total) + " pairs (u entries <= " + std::to_string(u_bound) + ", v in D) have distinct psi"};
}

CheckOutcome check_db_count(unsigned n) {
  const auto d = oq::enumerate_D(n), b = oq::enumerate_B(n);
  std::set<PbwIndex> uni(d.begin(), d.end());
  uni.insert(b.begin(), b.end());
  const BigInt formula = db_count_formula(n);
  const bool ok = uni.size() == d.size() + b.size() && BigInt(static_cast<unsigned long>(uni.size())) == formula &&
                  d.size() == static_cast<std::size_t>(n) * n * n;
  return {ok, "|D|=" + std::to_string(d.size()) + ", |B|=" + std::to_string(b.size()) + ", |D u B|=" +
                  std::to_string(uni.size()) + ", formula " + formula.get_str()};
}

Report bigon_suite(const VerifyOptions& o) {
  const OqAlgebra alg(ScalarRing::root_of_unity(static_cast<int>(o.order)));
  const OqAlgebra generic(ScalarRing::generic());
  const unsigned n = o.order;
  const std::uint64_t seed = o.seed;
  Report r;
  r.checks.push_back(run_check("bigon.defining-relations", [&] { return check_defining_relations(alg); }));
  r.checks.push_back(run_check("bigon.defining-relations-generic", [&] { return check_defining_relations(generic); }));
  r.checks.push_back(run_check("bigon.rewriting-matches-closed-form", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kWords, i);
             const std::string w = random_word(rng, 6);
             const OqElement left = alg.normal_form(w, oq::Strategy::Leftmost);
             const OqElement right = alg.normal_form(w, oq::Strategy::Rightmost);
             if (left != right) return failure("rewriting strategies disagree on " + w);
             if (left != word_product(alg, w)) return failure("closed-form product disagrees on " + w);
             return std::nullopt;
           })
        .outcome("random words of length <= 6");
  }));
  r.checks.push_back(run_check("bigon.deg-equals-phi", [&] { return check_deg_equals_phi(alg, 2 * n, o.mode); }));
  r.checks.push_back(run_check("bigon.ad-power-in-E", [&] { return check_e_structure(alg, 10); }));
  r.checks.push_back(run_check("bigon.ad-power-in-E-generic", [&] { return check_e_structure(generic, 10); }));
  r.checks.push_back(run_check("bigon.frobenius-images-central", [&] { return check_aq_central(alg); }));
  r.checks.push_back(run_check("bigon.psi-injective", [&] { return check_psi_injective(n, 2); }));
  r.checks.push_back(run_check("bigon.db-count", [&] { return check_db_count(n); }));
  r.checks.push_back(run_check("bigon.independence-over-Aq", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kIndependence, i);
             const auto cert = oq::independence_certificate(alg, random_aq_coefficient_map(alg, rng));
             if (cert.certified) return std::nullopt;
             return failure(cert.detail);
           })
        .outcome("random A_q combinations of {O_k : k in D} certified nonzero");
  }));
  r.checks.push_back(run_check("bigon.localized-spanning", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kLocalized, i);
             const PbwIndex m = random_lambda_index(rng, o.max_exp);
             if (oq::verify_localized(alg, m, oq::localized_express(alg, m))) return std::nullopt;
             return failure("re-expansion fails for " + m.to_string());
           })
        .outcome("monomials with entries <= " + std::to_string(o.max_exp) + " re-expand after (d^N)^s");
  }));
  r.checks.push_back(run_check("bigon.spanning-by-DB", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kSpanning, i);
             const PbwIndex m = random_lambda_index(rng, o.max_exp);
             if (oq::verify_DB(alg, m, oq::express_in_DB(alg, m))) return std::nullopt;
             return failure("re-expansion over D u B fails for " + m.to_string());
           })
        .outcome("monomials with entries <= " + std::to_string(o.max_exp) + " re-expand over D u B");
  }));
  r.checks.push_back(run_check("bigon.tensor-square-independence", [&] {
    const std::size_t trials = std::min<std::size_t>(o.trials, 20);
    return run_trials(trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kTensor, i);
             std::map<oq::IndexTuple, oq::TensorElement> coeffs;
             const long keys = rng.uniform(1, 3);
             while (static_cast<long>(coeffs.size()) < keys) {
               oq::IndexTuple k;
               for (int f = 0; f < 2; ++f) {
                 k.push_back({0, static_cast<std::uint32_t>(rng.uniform(0, n - 1)),
                              static_cast<std::uint32_t>(rng.uniform(0, n - 1)),
                              static_cast<std::uint32_t>(rng.uniform(0, n - 1))});
               }
               coeffs.emplace(k, oq::tensor_product({random_aq_element(alg, rng, 2), random_aq_element(alg, rng, 2)}));
             }
             const auto cert = oq::tensor_independence_certificate(alg, coeffs);
             if (cert.certified) return std::nullopt;
             return failure(cert.detail);
           })
        .outcome("random combinations in the tensor square certified nonzero");
  }));
  r.checks.push_back(run_check("bigon.parallel-product-matches-serial", [&] {
    return run_trials(std::min<std::size_t>(o.trials, 20), ExecutionMode::Serial,
                      [&](std::size_t i) -> std::optional<std::string> {
                        Rng rng = Rng::for_trial(seed, kParallelProduct, i);
                        OqElement x = alg.zero(), y = alg.zero();
                        for (int t = 0; t < 6; ++t) {
                          x.add_term(random_lambda_index(rng, 4), random_nonzero_scalar(alg.ring(), rng));
                          y.add_term(random_lambda_index(rng, 4), random_nonzero_scalar(alg.ring(), rng));
                        }
                        if (alg.mul(x, y) == alg.mul_parallel(x, y)) return std::nullopt;
                        return failure("products differ in trial " + std::to_string(i));
                      })
        .outcome("random products agree");
  }));
  return r;
}

// ---------------------------------------------------------------------------
// qtorus

std::string fixture_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

void add_qtorus_checks(Report& r, const std::string& name, const Triangulation& t, const VerifyOptions& o) {
  const std::string prefix = "qtorus." + name + ".";
  const unsigned n = o.order;
  const std::uint64_t seed = o.seed;
  const ScalarRing ring = ScalarRing::root_of_unity(static_cast<int>(n));

  ExchangeMatrix sigma;
  r.checks.push_back(run_check(prefix + "sigma-antisymmetric", [&]() -> CheckOutcome {
    sigma = sigma_from_fans(t);
    return {sigma.is_antisymmetric() && sigma.entries_in_range(),
            std::to_string(sigma.size()) + "x" + std::to_string(sigma.size()) + " exchange matrix, entries in {-2..2}"};
  }));
  if (sigma.size() != t.edge_count) return;
  const QuantumTorus mu(ring, sigma, 1), nu(ring, sigma, static_cast<long>(n) * n);
  const std::size_t edges = t.edge_count;

  r.checks.push_back(run_check(prefix + "generator-commutation", [&]() -> CheckOutcome {
    for (std::size_t i = 0; i < edges; ++i)
      for (std::size_t j = 0; j < edges; ++j) {
        const QTElement lhs = mu.mul(mu.generator(i), mu.generator(j));
        const QTElement rhs = mu.mul(mu.generator(j), mu.generator(i)).scaled(mu.mu_power(2 * sigma(i, j)));
        if (lhs != rhs) return {false, "Y_i Y_j != mu^{2 sigma_ij} Y_j Y_i at i=" + std::to_string(i) + ", j=" + std::to_string(j)};
        if (mu.weyl_word({i, j}) != mu.weyl_word({j, i})) {
          return {false, "[Y_i Y_j] != [Y_j Y_i] at i=" + std::to_string(i) + ", j=" + std::to_string(j)};
        }
      }
    return {true, "all generator pairs commute up to mu^{2 sigma} and Weyl words are symmetric"};
  }));

  r.checks.push_back(run_check(prefix + "weyl-product-rule", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kQtWeyl, i);
             Exponent a(edges), b(edges);
             for (auto& x : a) x = rng.uniform(-3, 3);
             for (auto& x : b) x = rng.uniform(-3, 3);
             Exponent s(edges);
             for (std::size_t e = 0; e < edges; ++e) s[e] = a[e] + b[e];
             const QTElement lhs = mu.mul(mu.weyl_monomial(a), mu.weyl_monomial(b));
             const QTElement rhs = mu.weyl_monomial(s).scaled(mu.mu_power(mu.pairing(a, b)));
             if (lhs != rhs) return failure("[Y^a][Y^b] != mu^{a.sigma.b}[Y^{a+b}] for a=" + exponent_string(a));
             // Weyl words are independent of the letter order.
             std::vector<std::size_t> letters;
             Exponent positive(edges, 0), neg(edges);
             for (std::size_t e = 0; e < edges; ++e) {
               positive[e] = std::max(a[e], 0L);
               neg[e] = -a[e];
               for (long c = 0; c < positive[e]; ++c) letters.push_back(e);
             }
             for (std::size_t k = letters.size(); k > 1; --k) {
               std::swap(letters[k - 1], letters[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1))]);
             }
             if (mu.weyl_word(letters) != mu.weyl_monomial(positive)) return failure("Weyl word depends on order");
             if (mu.mul(mu.weyl_monomial(a), mu.weyl_monomial(neg)) != mu.one()) return failure("[Y^a][Y^-a] != 1");
             return std::nullopt;
           })
        .outcome("random exponent pairs satisfy the Weyl product rule");
  }));

  r.checks.push_back(run_check(prefix + "h-central", [&]() -> CheckOutcome {
    for (std::size_t v = 0; v < t.puncture_count(); ++v) {
      const QTElement h = central_H(mu, t, v);
      if (h != mu.weyl_monomial(h_exponent(t, v))) return {false, "H_" + t.punctures[v].name + " is not the Weyl monomial of its fan"};
      if (!balanced_check(h_exponent(t, v), t)) return {false, "H_" + t.punctures[v].name + " is not balanced"};
      for (std::size_t i = 0; i < edges; ++i) {
        if (!mu.commute(h, mu.generator(i)) || !mu.commute(h, mu.generator(i, -1))) {
          return {false, "H_" + t.punctures[v].name + " does not commute with Y_" + std::to_string(i)};
        }
      }
    }
    return {true, std::to_string(t.puncture_count()) + " puncture elements commute with every Y_i^{+-1}"};
  }));

  std::optional<ZBasis> zb;
  r.checks.push_back(run_check(prefix + "z-basis", [&]() -> CheckOutcome {
    zb = balanced_z_basis(t);
    for (std::size_t v = 0; v < t.puncture_count(); ++v) {
      if (zb->z_vector(v) != h_exponent(t, v)) return {false, "Z_" + std::to_string(v) + " is not H_" + t.punctures[v].name};
    }
    for (std::size_t i = 0; i < edges; ++i)
      for (std::size_t j = 0; j < edges; ++j) {
        const QTElement zi = mu.weyl_monomial(zb->z_vector(i)), zj = mu.weyl_monomial(zb->z_vector(j));
        const long bij = mu.pairing(zb->z_vector(i), zb->z_vector(j));
        if (mu.mul(zi, zj) != mu.mul(zj, zi).scaled(mu.mu_power(2 * bij))) {
          return {false, "Z_i Z_j != mu^{2 b_ij} Z_j Z_i at i=" + std::to_string(i) + ", j=" + std::to_string(j)};
        }
      }
    return {true, "basis of the balanced lattice (index " + zb->lattice_index.get_str() + ") starting with the H_v"};
  }));

  r.checks.push_back(run_check(prefix + "balanced-closure", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kQtBalanced, i);
             Exponent a(edges), b(edges);
             for (auto& x : a) x = rng.uniform(-3, 3);
             for (auto& x : b) x = rng.uniform(-3, 3);
             Exponent neg(a), sum(a);
             for (std::size_t e = 0; e < edges; ++e) {
               neg[e] = -a[e];
               sum[e] = a[e] + b[e];
             }
             if (balanced_check(a, t) != balanced_check(neg, t)) return failure("negation changes balance");
             if (balanced_check(a, t) && balanced_check(b, t) && !balanced_check(sum, t)) return failure("sum not balanced");
             return std::nullopt;
           })
        .outcome("random exponents respect closure under sum and negation");
  }));

  if (!zb) return;

  r.checks.push_back(run_check(prefix + "frobenius-multiplicative", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kQtFrobenius, i);
             const QTElement x = random_balanced_element(nu, *zb, rng), y = random_balanced_element(nu, *zb, rng);
             const QTElement lhs = frobenius_qt(nu, mu, n, nu.mul(x, y));
             const QTElement rhs = mu.mul(frobenius_qt(nu, mu, n, x), frobenius_qt(nu, mu, n, y));
             if (lhs != rhs) return failure("F(xy) != F(x)F(y) in trial " + std::to_string(i));
             const Exponent a = random_balanced_exponent(*zb, rng, 3), b = random_balanced_exponent(*zb, rng, 3);
             const QTElement fa = frobenius_qt(nu, mu, n, nu.weyl_monomial(a));
             const QTElement fb = frobenius_qt(nu, mu, n, nu.weyl_monomial(b));
             if ((fa == fb) != (a == b)) return failure("F is not injective on monomials");
             return std::nullopt;
           })
        .outcome("random balanced pairs: F multiplicative and injective on monomials");
  }));

  r.checks.push_back(run_check(prefix + "frobenius-of-z", [&]() -> CheckOutcome {
    for (std::size_t i = 0; i < edges; ++i) {
      const Exponent z = zb->z_vector(i);
      if (frobenius_qt(nu, mu, n, nu.weyl_monomial(z)) != mu.power(mu.weyl_monomial(z), n)) {
        return {false, "F(Z_" + std::to_string(i) + ") != Z_" + std::to_string(i) + "^N"};
      }
    }
    return {true, "F(Z_i) = Z_i^N for every basis vector"};
  }));

  r.checks.push_back(run_check(prefix + "degree-additive", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kQtDegree, i);
             const QTElement x = random_balanced_element(mu, *zb, rng), y = random_balanced_element(mu, *zb, rng);
             const Exponent dx = qt_deg(x, *zb), dy = qt_deg(y, *zb), dxy = qt_deg(mu.mul(x, y), *zb);
             Exponent sum(dx.size());
             for (std::size_t k = 0; k < dx.size(); ++k) sum[k] = dx[k] + dy[k];
             if (dxy != sum) return failure("deg(xy)=" + exponent_string(dxy) + " but deg x + deg y = " + exponent_string(sum));
             return std::nullopt;
           })
        .outcome("random nonzero pairs have deg(xy) = deg x + deg y");
  }));

  r.checks.push_back(run_check(prefix + "center-free-certificate", [&] {
    const std::size_t p = zb->puncture_count;
    std::vector<Exponent> box{Exponent{}};
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<Exponent> next;
      for (const auto& b : box)
        for (long v = 0; v < static_cast<long>(n); ++v) {
          Exponent e(b);
          e.push_back(v);
          next.push_back(std::move(e));
        }
      box = std::move(next);
    }
    const std::size_t trials = std::min<std::size_t>(o.trials, p == 1 ? 20 : 3);
    return run_trials(trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kQtCenterFree, i);
             std::map<Exponent, QTElement> ls;
             for (const auto& k : box) ls.emplace(k, random_balanced_element(nu, *zb, rng, 2, 1));
             const CenterFreeCertificate cert = center_free_certificate(nu, mu, *zb, n, ls);
             if (!cert.certified) return failure(cert.detail);
             // Negative control: the tuple N lies outside the box and collides with 0.
             Exponent zero(p, 0), outside(p, 0);
             outside[0] = n;
             Exponent x0(p, 0), x1(p, 0);
             x1[0] = -1;
             const auto control = center_free_certificate(n, p, {zero, outside}, {{zero, x0}, {outside, x1}});
             if (control.certified) return failure("colliding control was certified");
             return std::nullopt;
           })
        .outcome("random F-images over the box {0..N-1}^p certified; colliding control refuted");
  }));

  r.checks.push_back(run_check(prefix + "parallel-product-matches-serial", [&] {
    return run_trials(std::min<std::size_t>(o.trials, 20), ExecutionMode::Serial,
                      [&](std::size_t i) -> std::optional<std::string> {
                        Rng rng = Rng::for_trial(seed, kQtWeyl + 100, i);
                        const QTElement x = random_balanced_element(mu, *zb, rng, 8, 3);
                        const QTElement y = random_balanced_element(mu, *zb, rng, 8, 3);
                        if (mu.mul(x, y) == mu.mul_parallel(x, y)) return std::nullopt;
                        return failure("products differ in trial " + std::to_string(i));
                      })
        .outcome("random products agree");
  }));
}

Report qtorus_suite(const VerifyOptions& o) {
  Report r;
  if (o.triangulation_path) {
    Triangulation t;
    try {
      t = Triangulation::load(*o.triangulation_path);
    } catch (const TriangulationError& e) {
      throw std::invalid_argument(e.what());
    }
    add_qtorus_checks(r, fixture_name(*o.triangulation_path), t, o);
  } else {
    add_qtorus_checks(r, "once_punctured_torus", Triangulation::once_punctured_torus(), o);
    add_qtorus_checks(r, "four_punctured_sphere", Triangulation::four_punctured_sphere(), o);
  }
  return r;
}

// ---------------------------------------------------------------------------
// torus-skein

Report torus_skein_suite(const VerifyOptions& o) {
  const unsigned n = o.order, kmax = o.kmax;
  if (n < 3) throw std::invalid_argument("torus-skein needs N >= 3");
  if (kmax < 1) throw std::invalid_argument("torus-skein needs --kmax >= 1");
  Report r;
  r.checks.push_back(run_check("torus-skein.a-basis-roundtrip", []() -> CheckOutcome {
    for (unsigned d = 0; d <= 20; ++d) {
      const Polynomial xd = Polynomial::monomial(d);
      const auto c = a_basis_expand(xd);
      if (a_basis_resum(c) != xd) return {false, "x^" + std::to_string(d) + " does not re-expand"};
      if (d >= 1 && (c.size() != d + 1 || c[d] != 1)) return {false, "expansion of x^" + std::to_string(d) + " is not unitriangular"};
    }
    return {true, "x^d for d <= 20 re-expand from the A-basis with unit leading coefficient"};
  }));
  r.checks.push_back(run_check("torus-skein.kill-rule", [n]() -> CheckOutcome {
    for (unsigned i = 1; i <= 5 * n; ++i) {
      const S1S2Element e = s1s2_reduce(chebyshev_A(i), n);
      const bool survives = (i + 2) % n == 0;
      if (e.is_zero() == survives) return {false, "A_" + std::to_string(i) + " reduces to " + e.to_string()};
    }
    return {true, "A_i dies exactly when N does not divide i+2, for i <= 5N"};
  }));
  r.checks.push_back(run_check("torus-skein.chebyshev-T-kN-reduces-to-e", [n, kmax]() -> CheckOutcome {
    for (unsigned k = 1; k <= kmax; ++k) {
      S1S2Element expected;
      expected.e_coeffs[k * n - 2] = -2;
      const S1S2Element got = s1s2_reduce(chebyshev_T(k * n), n);
      if (got != expected) return {false, "T_" + std::to_string(k * n) + " reduces to " + got.to_string()};
    }
    return {true, "T_{kN} reduces to -2 e_{kN-2} for 1 <= k <= " + std::to_string(kmax)};
  }));
  r.checks.push_back(run_check("torus-skein.frobenius-matrix-invertible", [n, kmax]() -> CheckOutcome {
    const FrobeniusMatrix fm = s1s2_frobenius_matrix(n, kmax);
    return {fm.invertible(), std::to_string(kmax + 1) + "x" + std::to_string(kmax + 1) + " matrix, determinant " +
                                 fm.determinant().get_str() + (fm.closed ? "" : ", image leaves the truncation")};
  }));
  r.checks.push_back(run_check("torus-skein.frobenius-composition", [n]() -> CheckOutcome {
    for (unsigned k = 0; k <= 6; ++k) {
      if (torus_frobenius(chebyshev_T(k), n) != chebyshev_T(k * n)) {
        return {false, "T_" + std::to_string(k) + " o T_N != T_" + std::to_string(k * n)};
      }
    }
    const bool unit = torus_frobenius(Polynomial::constant(1), n) == Polynomial::constant(1);
    return {unit, "p -> p o T_N sends T_k to T_{kN} for k <= 6 and fixes 1"};
  }));
  r.checks.push_back(run_check("torus-skein.solid-torus-free-rank", [n]() -> CheckOutcome {
    const SolidTorusFreeness f = solid_torus_freeness(n, 6 * n);
    return {f.spans && f.independent, std::string("1, x, ..., x^{N-1} ") + (f.spans ? "span" : "do not span") +
                                          " up to degree 6N over Q[T_N]; generators " +
                                          (f.independent ? "independent" : "dependent")};
  }));
  return r;
}

// ---------------------------------------------------------------------------
// chebyshev

Report chebyshev_suite(const VerifyOptions& o) {
  const unsigned n = o.order;
  const std::uint64_t seed = o.seed;
  Report r;
  r.checks.push_back(run_check("chebyshev.T-is-S-difference", []() -> CheckOutcome {
    for (unsigned k = 2; k <= 12; ++k) {
      if (chebyshev_T(k) != chebyshev_S(k) - chebyshev_S(k - 2)) return {false, "fails at n=" + std::to_string(k)};
    }
    return {true, "T_n = S_n - S_{n-2} for 2 <= n <= 12"};
  }));
  r.checks.push_back(run_check("chebyshev.T-composition", []() -> CheckOutcome {
    for (unsigned a = 0; a <= 6; ++a)
      for (unsigned b = 0; b <= 6; ++b)
        if (compose(chebyshev_T(a), chebyshev_T(b)) != chebyshev_T(a * b)) {
          return {false, "T_" + std::to_string(a) + " o T_" + std::to_string(b) + " != T_" + std::to_string(a * b)};
        }
    return {true, "T_m o T_n = T_mn for m, n <= 6"};
  }));
  r.checks.push_back(run_check("chebyshev.A-recurrence", []() -> CheckOutcome {
    for (unsigned k = 3; k <= 20; ++k)
      if (chebyshev_A(k) != chebyshev_S(k) + chebyshev_A(k - 2)) return {false, "fails at n=" + std::to_string(k)};
    const bool seeds = chebyshev_A(1) == chebyshev_S(1) && chebyshev_A(2) == chebyshev_S(2);
    return {seeds, "A_n = S_n + A_{n-2} for n <= 20"};
  }));
  r.checks.push_back(run_check("chebyshev.reduce-roundtrip", [&] {
    return run_trials(o.trials, o.mode, [&](std::size_t i) -> std::optional<std::string> {
             Rng rng = Rng::for_trial(seed, kChebyshevReduce, i);
             const Polynomial p = random_polynomial(rng, static_cast<unsigned>(rng.uniform(0, 5 * n)));
             const ChebyshevForm form = chebyshev_reduce(p, n);
             if (form.columns.size() > n) return failure("more than N columns for " + p.to_string());
             if (form.resubstitute() != p) return failure("round trip fails for " + p.to_string());
             return std::nullopt;
           })
        .outcome("random polynomials of degree <= 5N round-trip through the T_N basis");
  }));
  return r;
}

// ---------------------------------------------------------------------------
// counts

Report counts_suite(const VerifyOptions& o) {
  const unsigned n = o.order;
  Report r;
  r.checks.push_back(run_check("counts.db-formula-vs-enumeration", [n]() -> CheckOutcome {
    const BigInt formula = db_count_formula(n);
    const std::size_t counted = oq::count_DB(n);
    return {formula == BigInt(static_cast<unsigned long>(counted)),
            "formula " + formula.get_str() + ", enumeration " + std::to_string(counted)};
  }));
  r.checks.push_back(run_check("counts.bigon-dimension-equals-D", [n]() -> CheckOutcome {
    const BigInt k = k_dimension(SurfaceDescriptor::bigon(), n);
    const std::size_t d = oq::count_D(n);
    return {k == BigInt(static_cast<unsigned long>(d)), "N^3 = " + k.get_str() + ", |D| = " + std::to_string(d)};
  }));
  r.checks.push_back(run_check("counts.lambda-lower-equals-dimension", [n]() -> CheckOutcome {
    const std::vector<SurfaceDescriptor> surfaces{SurfaceDescriptor::bigon(), SurfaceDescriptor::closed(1, 1),
                                                  SurfaceDescriptor::closed(0, 3), SurfaceDescriptor::closed(2, 0),
                                                  SurfaceDescriptor::closed(2, 2), {1, 1, 3, 2}, {0, 2, 1, 1}};
    for (const auto& s : surfaces) {
      if (k_dimension(s, n) != lambda_bounds(s, n).first) {
        return {false, "mismatch at g=" + std::to_string(s.genus) + ", p=" + std::to_string(s.interior_punctures) +
                           ", b=" + std::to_string(s.boundary_intervals)};
      }
      if (lambda_bounds(s, n).first > lambda_bounds(s, n).second) return {false, "lower bound exceeds upper bound"};
    }
    return {true, std::to_string(surfaces.size()) + " descriptors: K = lambda lower <= lambda upper"};
  }));
  r.checks.push_back(run_check("counts.module-bound-monotone", [n]() -> CheckOutcome {
    for (unsigned k = 0; k <= 6; ++k)
      for (unsigned g = 0; g < 6; ++g)
        if (module_bound({g, k}, n) > module_bound({g + 1, k}, n)) {
          return {false, "decreases in g at g=" + std::to_string(g) + ", k=" + std::to_string(k)};
        }
    for (unsigned g = 0; g <= 6; ++g)
      for (unsigned k = 1; k < 6; ++k)
        if (module_bound({g, k}, n) > module_bound({g, k + 1}, n)) {
          return {false, "decreases in k at g=" + std::to_string(g) + ", k=" + std::to_string(k)};
        }
    return {true, "nondecreasing in g for k <= 6 and in k >= 1 for g <= 6"};
  }));
  r.checks.push_back(run_check("counts.dimension-anchors", [n]() -> CheckOutcome {
    const BigInt n3 = BigInt(n) * n * n;
    BigInt upper;
    mpz_ui_pow_ui(upper.get_mpz_t(), n, 15);  // 2^{2g+p-1} - 1 = 15 at g = 2, p = 1
    const bool ok = r_of_surface(SurfaceDescriptor::bigon()) == 1 && k_dimension(SurfaceDescriptor::closed(1, 1), n) == n3 &&
                    k_dimension(SurfaceDescriptor::closed(0, 3), n) == n3 && module_bound({2, 0}, n) == n3 &&
                    lambda_bounds(SurfaceDescriptor::closed(2, 1), n).second == upper &&
                    lambda_bounds(SurfaceDescriptor::bigon(), n) == std::make_pair(n3, db_count_formula(n));
    return {ok, "r(D_2)=1; K(torus with one puncture)=K(P_3)=N^3; manifold bound(g=2,k=0)=N^3; lambda upper(g=2,p=1)=N^15; lambda(D_2)=(N^3, |D u B|)"};
  }));
  return r;
}

}  // namespace

Report run_suite(const std::string& suite, const VerifyOptions& options) {
  if (options.order == 0 || options.order % 2 == 0) {
    throw std::invalid_argument("N must be odd and positive, got " + std::to_string(options.order));
  }
  Report r;
  if (suite == "bigon") {
    r = bigon_suite(options);
  } else if (suite == "qtorus") {
    r = qtorus_suite(options);
  } else if (suite == "torus-skein") {
    r = torus_skein_suite(options);
  } else if (suite == "chebyshev") {
    r = chebyshev_suite(options);
  } else if (suite == "counts") {
    r = counts_suite(options);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  r.suite = suite;
  r.order = options.order;
  r.seed = options.seed;
  r.sort_checks();
  return r;
}

}  // namespace skein
