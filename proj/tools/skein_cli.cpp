// skein: dimension calculators and verification suites.
//
//   skein dims surface --genus G --punctures P --boundary B [--circles C] --N N [--pretty]
//   skein dims manifold --genus G --markings K --N N [--pretty]
//   skein verify <bigon|qtorus|torus-skein|chebyshev|counts> [--N N] [--seed S] [--trials T]
//                [--max-exp E] [--triangulation FILE] [--kmax K] [--serial] [--no-timing] [--pretty]
//
// Exit status: 0 success, 1 a verification check failed, 2 usage or input error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/dimensions.hpp"
#include "skein/suites.hpp"

namespace {

constexpr int kUsageError = 2;

// Exact integers: JSON numbers while they fit in 64 bits, decimal strings beyond.
nlohmann::ordered_json big_json(const skein::BigInt& x) {
  if (x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, x.get_mpz_t());
    return v;
  }
  return x.get_str();
}

void print(const nlohmann::ordered_json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stated skein algebras at roots of unity: dimensions and verification suites"};
  app.require_subcommand(1);

  bool pretty = false;

  auto* dims = app.add_subcommand("dims", "Closed-form dimensions and bounds");
  dims->require_subcommand(1);

  unsigned s_genus = 0, s_punctures = 0, s_boundary = 0, s_order = 0;
  int s_circles = -1;
  auto* surface = dims->add_subcommand("surface", "r, K and lambda bounds of a punctured bordered surface");
  surface->add_option("--genus", s_genus, "Genus of the compact model")->required();
  surface->add_option("--punctures", s_punctures, "Interior punctures")->required();
  surface->add_option("--boundary", s_boundary, "Boundary intervals (boundary punctures)")->required();
  surface->add_option("--circles", s_circles, "Boundary circles carrying the intervals (default 1 if boundary > 0)");
  surface->add_option("--N", s_order, "Odd order of the root of unity")->required();
  surface->add_flag("--pretty", pretty, "Indented JSON");

  unsigned m_genus = 0, m_markings = 0, m_order = 0;
  auto* manifold = dims->add_subcommand("manifold", "Upper bound for a compact marked 3-manifold");
  manifold->add_option("--genus", m_genus, "Heegaard genus")->required();
  manifold->add_option("--markings", m_markings, "Number of marking components")->required();
  manifold->add_option("--N", m_order, "Odd order of the root of unity")->required();
  manifold->add_flag("--pretty", pretty, "Indented JSON");

  skein::VerifyOptions vopt;
  std::string suite, triangulation;
  bool serial = false, no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(skein::suite_names()));
  verify->add_option("--N", vopt.order, "Odd order of the root of unity")->default_val(3);
  verify->add_option("--seed", vopt.seed, "PRNG seed")->default_val(1);
  verify->add_option("--trials", vopt.trials, "Random trials per randomized check")->default_val(100);
  verify->add_option("--max-exp", vopt.max_exp, "Largest exponent in random monomials")->default_val(6);
  verify->add_option("--triangulation", triangulation, "Triangulation JSON file (qtorus)")->check(CLI::ExistingFile);
  verify->add_option("--kmax", vopt.kmax, "Truncation for the S^1 x S^2 Frobenius matrix")->default_val(6);
  verify->add_flag("--serial", serial, "Use the serial reference kernels");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed_ms fields");
  verify->add_flag("--pretty", pretty, "Indented JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (surface->parsed()) {
      const skein::SurfaceDescriptor s{s_genus, s_punctures, s_boundary, s_circles};
      const auto [lower, upper] = skein::lambda_bounds(s, s_order);
      nlohmann::ordered_json j;
      j["r"] = skein::r_of_surface(s);
      j["K"] = big_json(skein::k_dimension(s, s_order));
      j["lambda_lower"] = big_json(lower);
      j["lambda_upper"] = big_json(upper);
      print(j, pretty);
      return 0;
    }
    if (manifold->parsed()) {
      nlohmann::ordered_json j;
      j["bound"] = big_json(skein::module_bound({m_genus, m_markings}, m_order));
      print(j, pretty);
      return 0;
    }
    if (verify->parsed()) {
      if (!triangulation.empty()) vopt.triangulation_path = triangulation;
      vopt.mode = serial ? skein::ExecutionMode::Serial : skein::ExecutionMode::Parallel;
      const skein::Report report = skein::run_suite(suite, vopt);
      std::cout << report.to_json(pretty, !no_timing) << "\n";
      return report.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
