#include "flowcheck/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flowcheck/csv.hpp"

namespace flowcheck {

namespace {

constexpr const char* kBanner = "flowcheck 1.0.0";

ExtRational opt_rational(const std::string& text, const char* flag) {
  try {
    return ExtRational::parse(text);
  } catch (const std::exception&) {
    throw InvalidConfig(std::string(flag) +
                        " expects an exact rational \"a\", \"a/b\", or \"inf\"; got \"" +
                        text + "\"");
  }
}

struct Options {
  std::string p, q, alpha, beta;
  int n_max = 64;
  long table_rows = 0;
  int grid = 32;
  double dt = 1e-3;
  double t_end = 1.0;
  double viscosity = 1.0;
  int lambda = 1;
  std::string field = "beltrami";
  std::uint64_t seed = 1;
  std::vector<double> deltas;
  double xi = 0.25;
  int quad_order = 8;
  std::string q_norm = "2";
  std::string out_path;
  bool quiet = false;
};

void run_mollify_experiment(const Options& o, std::ostream& csv) {
  for (std::size_t i = 1; i < o.deltas.size(); ++i)
    if (!(o.deltas[i] < o.deltas[i - 1]))
      throw InvalidConfig("--delta values must be strictly decreasing");
  ExtRational q = opt_rational(o.q_norm, "--q");
  double qd = q.is_infinite() ? std::numeric_limits<double>::infinity() : q.to_double();
  SampledField v = rigid_rotation({0, 0, 1}, o.grid);
  std::vector<MollifyRow> rows;
  for (double d : o.deltas) {
    SampledField m = mollify_div(v, MollifierConfig(d, o.xi, o.quad_order));
    SampledField diff = m;
    for (std::size_t k = 0; k < diff.data.size(); ++k) diff.data[k] -= v.data[k];
    rows.push_back({d, lq_norm(diff, qd), gradient_lq_norm(m, qd), support_margin(m)});
  }
  write_mollify_rows(csv, rows);
}

void run_simulate_trkal(const Options& o, std::ostream& csv) {
  if (o.lambda == 0) throw InvalidConfig("--lambda must be a nonzero integer");
  if (o.field == "beltrami") {
    BeltramiSpec spec{double(o.lambda), {{{0, 0, std::abs(o.lambda)}, 1.0, 0.0}}};
    write_ledger(csv, run_trkal(spec, o.t_end, o.dt, o.grid, o.viscosity));
    return;
  }
  // Random band-limited initial data: the energy balance still holds, the
  // Beltrami residual column records how far the state is from eigenfield
  // form, and analytic_E is the eigenvalue-lambda reference decay.
  if (!(o.dt > 0.0)) throw InvalidConfig("--dt must be positive");
  if (o.t_end < 0.0) throw InvalidConfig("--t-end must be nonnegative");
  if (o.viscosity < 0.0) throw InvalidConfig("--viscosity must be nonnegative");
  long long nsteps = std::llround(o.t_end / o.dt);
  if (std::abs(nsteps * o.dt - o.t_end) > 1e-9 * std::max(1.0, o.t_end))
    throw InvalidConfig("--t-end must be an integer multiple of --dt");

  SampledField u = random_divfree_field(o.seed, 2, o.grid);
  EnergyLedger led;
  double nu = o.viscosity;
  double lam2 = double(o.lambda) * o.lambda;
  auto energy_of = [](const SampledField& f) {
    double n2 = lq_norm(f, 2.0);
    return 0.5 * n2 * n2;
  };
  auto enstrophy_of = [](const SampledField& f) {
    double n2 = lq_norm(curl(f), 2.0);
    return n2 * n2;
  };
  double e0 = energy_of(u);
  double prev_ens = enstrophy_of(u);
  double d = 0.0;
  led.times.push_back(0.0);
  led.energy.push_back(e0);
  led.dissipation.push_back(0.0);
  led.beltrami_residual.push_back(beltrami_residual(u, double(o.lambda)));
  led.analytic_energy.push_back(e0);
  for (long long j = 1; j <= nsteps; ++j) {
    u = step_nse_spectral(u, o.dt, nu);
    double ens = enstrophy_of(u);
    d += 0.5 * o.dt * nu * (prev_ens + ens);
    prev_ens = ens;
    double t = j * o.dt;
    led.times.push_back(t);
    led.energy.push_back(energy_of(u));
    led.dissipation.push_back(d);
    led.beltrami_residual.push_back(beltrami_residual(u, double(o.lambda)));
    led.analytic_energy.push_back(e0 * std::exp(-2.0 * nu * lam2 * t));
  }
  write_ledger(csv, led);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exponent classifiers and numerical checks for incompressible flows"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "write CSV to this file instead of standard output");
  app.add_flag("--quiet", o.quiet, "suppress the version banner");

  CLI::App* classify = app.add_subcommand("classify", "exponent classification commands");
  classify->require_subcommand(1);
  classify->fallthrough();
  auto add_pq = [&](CLI::App* c) {
    c->add_option("--p", o.p, "time exponent (exact rational)")->required();
    c->add_option("--q", o.q, "space exponent (exact rational)")->required();
  };
  auto add_ab = [&](CLI::App* c) {
    c->add_option("--alpha", o.alpha, "multiplier time exponent (exact rational)")->required();
    c->add_option("--beta", o.beta, "multiplier space exponent (exact rational)")->required();
  };
  CLI::App* euler_grad =
      classify->add_subcommand("euler-grad", "inviscid gradient energy criterion");
  euler_grad->fallthrough();
  add_pq(euler_grad);
  CLI::App* nse_grad =
      classify->add_subcommand("nse-grad", "viscous gradient criterion");
  nse_grad->fallthrough();
  add_pq(nse_grad);
  CLI::App* euler_belt =
      classify->add_subcommand("euler-beltrami", "inviscid Beltrami-type bootstrap");
  euler_belt->fallthrough();
  add_ab(euler_belt);
  euler_belt->add_option("--n-max", o.n_max, "iteration cap");
  CLI::App* nse_belt =
      classify->add_subcommand("nse-beltrami", "viscous Beltrami-type bootstrap");
  nse_belt->fallthrough();
  add_ab(nse_belt);
  nse_belt->add_option("--n-max", o.n_max, "iteration cap");
  CLI::App* nse_reg =
      classify->add_subcommand("nse-regularity", "closed-form viscous regularity verdict");
  nse_reg->fallthrough();
  add_ab(nse_reg);

  CLI::App* beta0_cmd =
      app.add_subcommand("beta0", "threshold space exponent for a multiplier class");
  beta0_cmd->fallthrough();
  add_ab(beta0_cmd);

  CLI::App* table = app.add_subcommand("table", "exact rational tables");
  table->require_subcommand(1);
  table->fallthrough();
  CLI::App* lnrn = table->add_subcommand("ln-rn", "interval decomposition of (3, inf)");
  lnrn->fallthrough();
  lnrn->add_option("--n-max", o.table_rows, "number of rows")->required();

  CLI::App* moll = app.add_subcommand(
      "mollify-experiment", "mollification of the rigid rotation across a delta sweep");
  moll->fallthrough();
  moll->add_option("--grid", o.grid, "nodes per axis on the ball's bounding box");
  moll->add_option("--delta", o.deltas, "mollification widths, strictly decreasing")
      ->required();
  moll->add_option("--xi", o.xi, "margin parameter");
  moll->add_option("--quad-order", o.quad_order, "Gauss nodes per axis");
  moll->add_option("--q", o.q_norm, "norm exponent (exact rational)");

  CLI::App* trkal = app.add_subcommand(
      "simulate-trkal", "viscous decay of an eigenmode with an energy ledger");
  trkal->fallthrough();
  trkal->add_option("--lambda", o.lambda, "curl eigenvalue (integer, axis mode)");
  trkal->add_option("--grid", o.grid, "nodes per axis");
  trkal->add_option("--dt", o.dt, "time step");
  trkal->add_option("--t-end", o.t_end, "final time");
  trkal->add_option("--viscosity", o.viscosity, "kinematic viscosity, 0 for inviscid");
  trkal->add_option("--field", o.field, "initial data: beltrami or random")
      ->check(CLI::IsMember({"beltrami", "random"}));
  trkal->add_option("--seed", o.seed, "random field seed");

  std::vector<const char*> argv;
  argv.push_back("flowcheck");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (!o.quiet) err << kBanner << '\n';

  std::ostringstream csv;
  try {
    if (euler_grad->parsed())
      write_verdict(csv, euler_gradient_verdict(BochnerSpec{opt_rational(o.p, "--p"),
                                                            opt_rational(o.q, "--q")}));
    else if (nse_grad->parsed())
      write_verdict(csv, nse_gradient_verdict(BochnerSpec{opt_rational(o.p, "--p"),
                                                          opt_rational(o.q, "--q")}));
    else if (euler_belt->parsed())
      write_trace(csv, euler_beltrami_trace(opt_rational(o.alpha, "--alpha"),
                                            opt_rational(o.beta, "--beta"), o.n_max));
    else if (nse_belt->parsed())
      write_trace(csv, nse_beltrami_trace(opt_rational(o.alpha, "--alpha"),
                                          opt_rational(o.beta, "--beta"), o.n_max));
    else if (nse_reg->parsed())
      write_verdict(csv, nse_regularity_verdict(opt_rational(o.alpha, "--alpha"),
                                                opt_rational(o.beta, "--beta")));
    else if (beta0_cmd->parsed())
      write_beta0(csv, opt_rational(o.alpha, "--alpha"), opt_rational(o.beta, "--beta"));
    else if (lnrn->parsed()) {
      if (o.table_rows < 1) throw InvalidConfig("table needs --n-max >= 1");
      write_interval_table(csv, o.table_rows);
    } else if (moll->parsed())
      run_mollify_experiment(o, csv);
    else if (trkal->parsed())
      run_simulate_trkal(o, csv);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (o.out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file " << o.out_path << '\n';
      return 2;
    }
    file << csv.str();
  }
  return 0;
}

}  // namespace flowcheck
