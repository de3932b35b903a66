#include "flowcheck/csv.hpp"

#include <cstdio>

namespace flowcheck {

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

void write_verdict(std::ostream& os, const Verdict& v) {
  write_row(os, {"verdict", "citation", "witness_p", "witness_q"});
  write_row(os, {verdict_name(v.level), v.citation, v.witness.time_exp.str(),
                 v.witness.space_exp.str()});
}

void write_trace(std::ostream& os, const BootstrapTrace& trace) {
  write_row(os, {"verdict", "citation", "witness_p", "witness_q", "stop", "n_stop"});
  write_row(os, {verdict_name(trace.final.level), trace.final.citation,
                 trace.final.witness.time_exp.str(), trace.final.witness.space_exp.str(),
                 stop_reason_name(trace.stop), std::to_string(trace.n_stop)});
  os << '\n';
  write_row(os, {"n", "p", "q", "scaling", "route", "energy", "regularity"});
  for (const IterationStep& s : trace.steps)
    write_row(os, {std::to_string(s.index), s.grad.time_exp.str(), s.grad.space_exp.str(),
                   s.scaling.str(), route_name(s.route), s.energy_certified ? "1" : "0",
                   s.regularity_certified ? "1" : "0"});
}

void write_beta0(std::ostream& os, const ExtRational& alpha, const ExtRational& beta) {
  ExtRational level = scaling_level(BochnerSpec{alpha, beta});
  ExtRational threshold = beta0(alpha, beta);
  write_row(os, {"alpha", "beta", "level", "beta0"});
  write_row(os, {alpha.str(), beta.str(), level.str(), threshold.str()});
}

void write_interval_table(std::ostream& os, long n_max) {
  write_row(os, {"n", "L_lo", "L_hi", "R_lo", "R_hi", "crossover", "alpha_at_L_left",
                 "level_L", "level_R"});
  for (long n = 1; n <= n_max; ++n) {
    IntervalRow r = ln_rn(n);
    write_row(os, {std::to_string(r.n), r.L_lo.str(), r.L_hi.str(), r.R_lo.str(),
                   r.R_hi.str(), r.crossover.str(), r.alpha_at_L_left.str(),
                   r.level_L.str(), r.level_R.str()});
  }
}

void write_ledger(std::ostream& os, const EnergyLedger& ledger) {
  write_row(os, {"t", "E", "D", "E_plus_D_minus_E0_rel", "beltrami_residual", "analytic_E"});
  if (ledger.energy.empty()) return;
  double e0 = ledger.energy.front();
  for (std::size_t i = 0; i < ledger.times.size(); ++i) {
    double rel = e0 != 0.0
                     ? (ledger.energy[i] + ledger.dissipation[i] - e0) / e0
                     : 0.0;
    write_row(os, {csv_double(ledger.times[i]), csv_double(ledger.energy[i]),
                   csv_double(ledger.dissipation[i]), csv_double(rel),
                   csv_double(ledger.beltrami_residual[i]),
                   csv_double(ledger.analytic_energy[i])});
  }
}

void write_mollify_rows(std::ostream& os, const std::vector<MollifyRow>& rows) {
  write_row(os, {"delta", "conv_lq", "grad_lq", "support_margin"});
  for (const MollifyRow& r : rows)
    write_row(os, {csv_double(r.delta), csv_double(r.conv), csv_double(r.grad),
                   csv_double(r.margin)});
}

}  // namespace flowcheck
