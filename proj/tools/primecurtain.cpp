// primecurtain — regenerate the prime-sum ratio series, random prime model
// sweeps, and Gaussian-prime angle statistics as CSV, and run the built-in
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primecurtain/acceptance.hpp"
#include "primecurtain/commands.hpp"
#include "primecurtain/csv.hpp"

namespace {

using namespace primecurtain;

int run(int argc, char** argv) {
  CLI::App app{"numerical experiments on prime sums, a random prime model, "
               "and Gaussian-prime angles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // figure <kind> --limit-n N --out PATH
  std::string figure_kind = "loglog";
  std::size_t limit_n = 10'000;
  std::string figure_out = "figure.csv";
  CLI::App* figure = app.add_subcommand(
      "figure", "ratio-series data: motivation|convergence|gaps|hyperbolas|shifted|loglog");
  figure->add_option("kind", figure_kind, "figure kind")->required();
  figure->add_option("--limit-n", limit_n, "largest series index n (>= 10)")
      ->capture_default_str();
  figure->add_option("--out", figure_out, "output CSV path")->capture_default_str();

  // cramer <action> --limit --seed --seeds --alpha --checkpoints --variant --out
  std::string cramer_action = "simulate";
  commands::CramerOptions copt;
  std::vector<double> cramer_checkpoints;
  std::string cramer_variant;
  std::string cramer_out = "cramer.csv";
  CLI::App* cramer = app.add_subcommand(
      "cramer", "random prime model: simulate|error-sweep|figure");
  cramer->add_option("action", cramer_action, "subcommand")->required();
  cramer->add_option("--limit", copt.limit, "largest candidate value")
      ->capture_default_str();
  cramer->add_option("--seed", copt.seed, "seed for simulate/figure")->capture_default_str();
  cramer->add_option("--seeds", copt.seeds, "seed count for error-sweep (runs 1..N)")
      ->capture_default_str();
  cramer->add_option("--alpha", copt.alpha, "power-sum exponent")->capture_default_str();
  cramer->add_option("--checkpoints", cramer_checkpoints,
                     "comma-separated x checkpoints")->delimiter(',');
  cramer->add_option("--variant", cramer_variant,
                     "modified_odd|classic (default: modified_odd; error-sweep: classic)");
  cramer->add_option("--out", cramer_out, "output CSV path")->capture_default_str();

  // gaussian <action> --max-norm --exponent --sectors-k --seeds --checkpoints --out
  std::string gaussian_action = "enumerate";
  commands::GaussianOptions gopt;
  std::vector<double> gaussian_checkpoints;
  std::string gaussian_out = "gaussian.csv";
  CLI::App* gaussian = app.add_subcommand(
      "gaussian", "Gaussian primes: enumerate|walk|sectors|fourth|model-walk");
  gaussian->add_option("action", gaussian_action, "subcommand")->required();
  gaussian->add_option("--max-norm", gopt.max_norm, "norm bound")->capture_default_str();
  gaussian->add_option("--exponent", gopt.exponent, "walk exponent n")->capture_default_str();
  gaussian->add_option("--sectors-k", gopt.sectors_k, "number of sectors")
      ->capture_default_str();
  gaussian->add_option("--seeds", gopt.seeds, "seed count for model-walk (runs 1..N)")
      ->capture_default_str();
  gaussian->add_option("--checkpoints", gaussian_checkpoints,
                       "comma-separated norm checkpoints")->delimiter(',');
  gaussian->add_option("--out", gaussian_out, "output CSV path")->capture_default_str();

  // verify [suite]
  std::string suite = "all";
  CLI::App* verify = app.add_subcommand(
      "verify", "run the acceptance checks: series|cramer|gaussian|all");
  verify->add_option("suite", suite, "suite to run")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage message
    return code == 0 ? 0 : 2;
  }

  if (figure->parsed()) {
    commands::figure(commands::figure_kind_from_string(figure_kind), limit_n, figure_out);
    std::cout << "wrote " << figure_out << "\n";
    return 0;
  }
  if (cramer->parsed()) {
    copt.checkpoints = cramer_checkpoints;
    if (!cramer_variant.empty()) {
      copt.variant = cramer_variant_from_string(cramer_variant);
      copt.variant_given = true;
    }
    commands::cramer(commands::cramer_action_from_string(cramer_action), copt, cramer_out);
    std::cout << "wrote " << cramer_out << "\n";
    return 0;
  }
  if (gaussian->parsed()) {
    gopt.checkpoints = gaussian_checkpoints;
    commands::gaussian(commands::gaussian_action_from_string(gaussian_action), gopt,
                       gaussian_out);
    std::cout << "wrote " << gaussian_out << "\n";
    return 0;
  }
  if (verify->parsed()) {
    return acceptance::report(acceptance::run_suite(suite), std::cout);
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const primecurtain::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
