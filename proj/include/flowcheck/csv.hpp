#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "flowcheck/bootstrap.hpp"
#include "flowcheck/mollify.hpp"
#include "flowcheck/regularity.hpp"
#include "flowcheck/trkal.hpp"

namespace flowcheck {

// CSV interchange layer. Every writer emits the header first, LF line
// endings, comma-separated cells with no quoting (no cell ever contains a
// comma). Rationals print exactly ("a/b" or "inf"), floating-point values
// with %.12g.

std::string csv_double(double v);

void write_row(std::ostream& os, const std::vector<std::string>& cells);

// verdict,citation,witness_p,witness_q
void write_verdict(std::ostream& os, const Verdict& v);

// Verdict block extended with the stop reason and stop index, a blank
// line, then one row per bootstrap step.
void write_trace(std::ostream& os, const BootstrapTrace& trace);

// alpha,beta,level,beta0
void write_beta0(std::ostream& os, const ExtRational& alpha, const ExtRational& beta);

// Interval decomposition rows 1..n_max.
void write_interval_table(std::ostream& os, long n_max);

// t,E,D,E_plus_D_minus_E0_rel,beltrami_residual,analytic_E
void write_ledger(std::ostream& os, const EnergyLedger& ledger);

// delta,conv_lq,grad_lq,support_margin
struct MollifyRow {
  double delta = 0.0;
  double conv = 0.0;
  double grad = 0.0;
  double margin = 0.0;
};
void write_mollify_rows(std::ostream& os, const std::vector<MollifyRow>& rows);

}  // namespace flowcheck
