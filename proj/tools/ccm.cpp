// ccm: verify cluster-character identities, print characters and F-polynomials.
//
//   ccm verify theorem --typeA-rank 3 --out report.json
//   ccm verify prop-a --algebra data/a2.json
//   ccm char --typeA-rank 2 --triangulation '[[1,3],[1,4]]' --arc '[2,5]'
//   ccm fpoly --algebra data/a2.json --module P1
//
// Exit status: 0 all checks hold, 1 a check failed (or a count was not polynomial), 2 bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccm/ccm.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

struct CommonFlags {
  std::optional<int> rank;
  std::string algebra;
  int max_dim = 10;
};

ccm::GrassmannOptions grassmann_options(const CommonFlags& f) {
  ccm::GrassmannOptions g;
  g.max_total_dim = f.max_dim;
  return g;
}

int run_verify(const std::string& suite, const CommonFlags& flags, const std::vector<std::uint32_t>& qs, unsigned jobs,
               std::uint64_t seed, const std::string& out) {
  const auto& names = ccm::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::cerr << "unknown suite '" << suite << "'\n";
    return exit_input;
  }
  if (flags.rank.has_value() == !flags.algebra.empty()) {
    std::cerr << "give exactly one of --typeA-rank and --algebra\n";
    return exit_input;
  }
  for (auto q : qs)
    if (!ccm::PrimeField::is_prime(q)) {
      std::cerr << "--q: " << q << " is not a prime\n";
      return exit_input;
    }

  ccm::SuiteOptions opt;
  opt.character.grassmann = grassmann_options(flags);
  if (!qs.empty()) opt.census_primes = qs;
  opt.jobs = jobs;
  opt.seed = seed;

  ccm::Report report;
  try {
    if (flags.rank) {
      report = ccm::run_typea_suite(suite, *flags.rank, opt);
    } else {
      const auto fx = ccm::load_fixture(flags.algebra);
      report = ccm::run_algebra_suite(suite, fx, flags.algebra, opt);
    }
  } catch (const ccm::error& e) {
    std::cerr << e.what() << "\n";
    return exit_input;
  }

  for (const auto& v : report.verdicts)
    if (!v.passed) {
      std::cout << "FAIL " << v.check << " " << v.instance << "\n  lhs: " << v.lhs << "\n  rhs: " << v.rhs << "\n";
      if (!v.detail.empty()) std::cout << "  " << v.detail << "\n";
    }
  std::cout << suite << ": " << report.passed() << "/" << report.verdicts.size() << " passed\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write '" << out << "'\n";
      return exit_input;
    }
    f << report.to_json().dump(2) << "\n";
  }
  return report.all_passed() ? exit_ok : exit_violation;
}

int run_char(const CommonFlags& flags, const std::string& module, const std::string& triangulation, const std::string& arc) {
  ccm::CharacterOptions opt;
  opt.grassmann = grassmann_options(flags);
  if (flags.rank) {
    if (triangulation.empty() || arc.empty()) {
      std::cerr << "char with --typeA-rank needs --triangulation and --arc\n";
      return exit_input;
    }
    ccm::check_rank(*flags.rank);
    const auto t = ccm::parse_triangulation(triangulation, *flags.rank);
    const auto model = ccm::algebra_from_triangulation(t);
    const auto z = ccm::e_module(model, ccm::parse_arcs(arc, *flags.rank));
    std::cout << ccm::cluster_character(z, opt).value.to_string('x') << "\n";
    return exit_ok;
  }
  if (flags.algebra.empty() || module.empty()) {
    std::cerr << "char needs --algebra with --module, or --typeA-rank with --triangulation and --arc\n";
    return exit_input;
  }
  const auto fx = ccm::load_fixture(flags.algebra);
  std::cout << ccm::c_prime(fx.family(module), opt).value.to_string('x') << "\n";
  return exit_ok;
}

int run_fpoly(const CommonFlags& flags, const std::string& module) {
  if (flags.algebra.empty() || module.empty()) {
    std::cerr << "fpoly needs --algebra and --module\n";
    return exit_input;
  }
  const auto fx = ccm::load_fixture(flags.algebra);
  std::cout << ccm::f_polynomial(fx.family(module), grassmann_options(flags)).value.to_string('y') << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster characters over cluster-tilted algebras: exact identity checks"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string suite, out, module, triangulation, arc;
  std::vector<std::uint32_t> qs;
  unsigned jobs = 0;
  std::uint64_t seed = 0x5eed;

  auto add_scope = [&](CLI::App* cmd) {
    cmd->add_option("--typeA-rank", flags.rank, "rank n of the type A_n cluster category (polygon with n+3 vertices)")->check(CLI::Range(1, 64));
    cmd->add_option("--algebra", flags.algebra, "algebra/module JSON fixture");
    cmd->add_option("--max-dim", flags.max_dim, "total-dimension ceiling for F-polynomials")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", suite, "theorem | prop-a | prop-b | prop-c | ind | lemma-fibers | remark")->required();
  add_scope(verify);
  verify->add_option("--q", qs, "primes for the fiber census, e.g. 2,3")->delimiter(',');
  verify->add_option("--jobs", jobs, "worker threads (default: all cores)");
  verify->add_option("--seed", seed, "seed for randomized decomposition sampling");
  verify->add_option("--out", out, "write the JSON report here");

  auto* chr = app.add_subcommand("char", "print a cluster character");
  add_scope(chr);
  chr->add_option("--module", module, "module name in the fixture");
  chr->add_option("--triangulation", triangulation, "arc list, e.g. [[1,3],[1,4]]");
  chr->add_option("--arc", arc, "arc, e.g. [2,5], or a list of arcs for a direct sum");

  auto* fpoly = app.add_subcommand("fpoly", "print the F-polynomial of a module");
  add_scope(fpoly);
  fpoly->add_option("--module", module, "module name in the fixture")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*verify) return run_verify(suite, flags, qs, jobs, seed, out);
    if (*chr) return run_char(flags, module, triangulation, arc);
    if (*fpoly) return run_fpoly(flags, module);
  } catch (const ccm::error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ccm::errc::not_polynomial_count ? exit_violation : exit_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_violation;
  }
  return exit_input;
}
