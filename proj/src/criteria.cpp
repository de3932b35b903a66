#include "flowcheck/criteria.hpp"

namespace flowcheck {

const char* verdict_name(VerdictLevel level) {
  switch (level) {
    case VerdictLevel::Inconclusive: return "Inconclusive";
    case VerdictLevel::EnergyEquality: return "EnergyEquality";
    case VerdictLevel::StrongSolution: return "StrongSolution";
    case VerdictLevel::ClassicalSolution: return "ClassicalSolution";
  }
  return "Inconclusive";
}

ExtRational euler_required_time_exponent(const ExtRational& q) {
  if (q <= ExtRational(6, 5))
    throw ExponentOutOfRange("gradient energy criterion needs q > 6/5 (Thm1.1), got q = " +
                             q.str());
  // Computed as 1/p = 1 - (6/5)/q so that q = inf yields p = 1 exactly.
  return (ExtRational(1) - ExtRational(6, 5) * q.reciprocal()).reciprocal();
}

ExtRational nse_required_time_exponent(const ExtRational& q) {
  if (q <= ExtRational(3, 2))
    throw ExponentOutOfRange("viscous gradient criterion needs q > 3/2 (Thm1.5), got q = " +
                             q.str());
  if (q < ExtRational(9, 5)) {
    // 1/p = 2 - 3/q
    return (ExtRational(2) - ExtRational(3) * q.reciprocal()).reciprocal();
  }
  return euler_required_time_exponent(q);
}

Verdict euler_gradient_verdict(const BochnerSpec& s) {
  if (s.space_exp <= ExtRational(6, 5))
    throw ExponentOutOfRange("gradient energy criterion needs q > 6/5 (Thm1.1), got q = " +
                             s.space_exp.str());
  if (s.space_exp >= ExtRational(9, 5)) {
    ExtRational p_req = euler_required_time_exponent(s.space_exp);
    if (s.time_exp >= p_req)
      return {VerdictLevel::EnergyEquality, "Thm1.1", {p_req, s.space_exp}};
  }
  return {VerdictLevel::Inconclusive, "none", s};
}

Verdict nse_gradient_verdict(const BochnerSpec& s) {
  if (s.space_exp <= ExtRational(3, 2))
    throw ExponentOutOfRange("viscous gradient criterion needs q > 3/2 (Thm1.5), got q = " +
                             s.space_exp.str());
  if (regularity_class(s)) return {VerdictLevel::StrongSolution, "ScalingNabla", s};
  ExtRational p_req = nse_required_time_exponent(s.space_exp);
  if (s.time_exp >= p_req) {
    const char* tag = (s.space_exp < ExtRational(9, 5)) ? "Thm1.5i" : "Thm1.5ii";
    return {VerdictLevel::EnergyEquality, tag, {p_req, s.space_exp}};
  }
  return {VerdictLevel::Inconclusive, "none", s};
}

BochnerSpec curl_to_gradient(const BochnerSpec& s, const DomainMeta& meta) {
  if (meta.bc == BoundaryCondition::Slip && !meta.betti_zero)
    throw TopologyObstruction(
        "curl-to-gradient transfer under slip conditions needs a vanishing first Betti number "
        "(Cor1.2); harmonic fields are invisible to the vorticity");
  return s;
}

bool regularity_class(const BochnerSpec& s) {
  return s.space_exp > ExtRational(3, 2) && scaling_level(s) <= ExtRational(2);
}

}  // namespace flowcheck
