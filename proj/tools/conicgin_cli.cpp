// conicgin: command-line driver for the symbolic-power computations on
// points of the conic xz = y^2.

#include <iostream>

#include "CLI11.hpp"
#include "conicgin/verify.hpp"

int main(int argc, char** argv) {
  conicgin::RunConfig cfg;
  std::string out_dir = cfg.out_dir.string();
  bool no_cache = false;

  CLI::App app{"Exact gin and Betti table computations for fat points on xz = y^2"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "number of points on the conic")->capture_default_str();
    sub->add_option("--prime", cfg.prime, "characteristic of the coefficient field")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for point parameters and coordinate changes")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "independent coordinate changes per gin")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "concurrent cells")->capture_default_str();
    sub->add_option("--out-dir", out_dir, "directory for artifacts and the oracle cache")->capture_default_str();
    sub->add_option("--format", cfg.formats, "restrict output formats (json, csv, svg)");
    sub->add_flag("--no-cache", no_cache, "ignore and do not write the oracle cache");
  };

  auto* gin = app.add_subcommand("gin", "reverse-lex gin of I^(m)");
  add_common(gin);
  gin->add_option("--m", cfg.m, "multiplicity")->capture_default_str();
  gin->add_option("--method", cfg.method, "oracle, hilbert or both (default both)");

  auto* resolve = app.add_subcommand("resolve", "graded Betti table of I^(m)");
  add_common(resolve);
  resolve->add_option("--m", cfg.m, "multiplicity")->capture_default_str();
  resolve->add_option("--method", cfg.method, "closed, recursion or both (default closed)");

  auto* limit = app.add_subcommand("limit", "convergence of scaled gins to the limiting shape");
  add_common(limit);
  limit->add_option("--m-max", cfg.m_max, "largest multiplicity")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check every invariant family");
  add_common(verify);
  verify->add_option("--m-max", cfg.m_max, "largest multiplicity")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.out_dir = out_dir;
  cfg.use_cache = !no_cache;

  try {
    const conicgin::CommandResult result = conicgin::run_command(cfg);
    std::cout << result.output;
    return result.exit_code;
  } catch (const conicgin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
