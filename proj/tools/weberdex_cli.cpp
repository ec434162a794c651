// weberdex: tabulate index-transform kernels, run round trips, verify identities, solve the wedge problem.
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_commands.hpp"

using weberdex::cli::ConfigError;
using weberdex::cli::json;
using weberdex::cli::RunConfig;

namespace {

// flag value that overrides a config entry only when given
template <class T>
void put(RunConfig& cfg, const char* key, const std::optional<T>& v) {
  if (v) cfg.values[key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weberdex: Weber-type index transforms"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::optional<std::string> config, out, format, only;
  bool seed = false;
  app.add_option("--config", config, "flat JSON config with a \"command\" key");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--only", only, "verify: restrict to one identity family");
  app.add_flag("--seed-fixtures", seed, "write a provenance stamp next to --out");

  std::optional<double> alpha, abscissa, tau_max, tau_step, param, beta, r_min, r_max;
  std::optional<std::vector<double>> xs, taus, s, theta;
  std::optional<std::string> route, action, audit_out;
  std::optional<long> nr, ntheta;

  auto* kernel = app.add_subcommand("kernel", "tabulate W_alpha(x, tau) by route");
  kernel->add_option("--alpha", alpha);
  kernel->add_option("--x", xs, "comma separated x values")->delimiter(',');
  kernel->add_option("--tau", taus, "comma separated tau values")->delimiter(',');
  kernel->add_option("--route", route, "direct, mb, anger or all");
  kernel->add_option("--abscissa", abscissa, "Mellin-Barnes line Re s");

  auto* transform = app.add_subcommand("transform", "forward transforms, inversions and round trips");
  transform->add_option("action", action, "forward-f|forward-g|invert-f|invert-g|roundtrip-f|roundtrip-g");
  transform->add_option("--alpha", alpha);
  transform->add_option("--x", xs, "comma separated evaluation points")->delimiter(',');
  transform->add_option("--tau-max", tau_max);
  transform->add_option("--tau-step", tau_step);
  transform->add_option("--abscissa", abscissa, "line for the inversion tail");

  auto* verify = app.add_subcommand("verify", "identity suite and ODE residual sweep (JSON lines)");
  verify->add_option("--s", s, "re[,im]: check the --only family at this s")->delimiter(',');
  verify->add_option("--param", param, "second argument of the custom check");

  auto* bvp = app.add_subcommand("bvp", "spectral solution on the wedge");
  bvp->add_option("--alpha", alpha);
  bvp->add_option("--beta", beta);
  bvp->add_option("--r-min", r_min);
  bvp->add_option("--r-max", r_max);
  bvp->add_option("--nr", nr);
  bvp->add_option("--ntheta", ntheta);
  bvp->add_option("--theta", theta, "comma separated angles")->delimiter(',');
  bvp->add_option("--audit-out", audit_out, "audit JSON lines (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : weberdex::cli::kBadInput;
  }

  RunConfig cfg;
  try {
    if (config) cfg = weberdex::cli::load_config_file(*config);
  } catch (const ConfigError& e) {
    std::cerr << "error: ConfigError: " << e.what() << "\n";
    return weberdex::cli::kBadInput;
  }
  for (auto* sub : app.get_subcommands()) cfg.values["command"] = sub->get_name();
  put(cfg, "out", out);
  put(cfg, "format", format);
  put(cfg, "only", only);
  if (seed) cfg.values["seed_fixtures"] = true;
  put(cfg, "alpha", alpha);
  put(cfg, "abscissa", abscissa);
  put(cfg, "tau_max", tau_max);
  put(cfg, "tau_step", tau_step);
  put(cfg, "param", param);
  put(cfg, "beta", beta);
  put(cfg, "r_min", r_min);
  put(cfg, "r_max", r_max);
  put(cfg, "x", xs);
  put(cfg, "tau", taus);
  put(cfg, "s", s);
  put(cfg, "theta", theta);
  put(cfg, "route", route);
  put(cfg, "action", action);
  put(cfg, "audit_out", audit_out);
  put(cfg, "nr", nr);
  put(cfg, "ntheta", ntheta);

  return weberdex::cli::run(cfg);
}
