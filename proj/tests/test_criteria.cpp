#include "flowcheck/criteria.hpp"

#include <doctest.h>

using namespace flowcheck;

namespace {
ExtRational rat(long long n, long long d = 1) { return ExtRational(n, d); }
const ExtRational inf = ExtRational::infinity();
}  // namespace

TEST_CASE("inviscid required time exponent along the certification curve") {
  CHECK(euler_required_time_exponent(rat(9, 5)) == rat(3));
  CHECK(euler_required_time_exponent(rat(2)) == rat(5, 2));
  CHECK(euler_required_time_exponent(rat(12, 5)) == rat(2));
  CHECK(euler_required_time_exponent(rat(3)) == rat(5, 3));
  CHECK(euler_required_time_exponent(rat(6)) == rat(5, 4));
  CHECK(euler_required_time_exponent(inf) == rat(1));
  CHECK_THROWS_AS(euler_required_time_exponent(rat(6, 5)), ExponentOutOfRange);
  CHECK_THROWS_AS(euler_required_time_exponent(rat(1)), ExponentOutOfRange);
}

TEST_CASE("required time exponent decreases strictly in q") {
  // More space integrability should never demand more time integrability.
  ExtRational prev = ExtRational::infinity();
  for (int k = 13; k <= 200; ++k) {
    ExtRational q(k, 10);  // sweeps (13/10, 20)
    if (q <= rat(6, 5)) continue;
    ExtRational p = euler_required_time_exponent(q);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("viscous required time exponent and the branch junction") {
  CHECK(nse_required_time_exponent(rat(8, 5)) == rat(8));
  CHECK(nse_required_time_exponent(rat(5, 3)) == rat(5));
  CHECK(nse_required_time_exponent(rat(9, 5)) == rat(3));
  CHECK(nse_required_time_exponent(rat(2)) == rat(5, 2));
  // Both branch formulas give 3 at q = 9/5: continuity of the requirement.
  ExtRational just_below = rat(9, 5) - rat(1, 1000000);
  ExtRational q = just_below;
  ExtRational lo = ExtRational(1) * q / (rat(2) * q - rat(3));
  CHECK(nse_required_time_exponent(just_below) == lo);
  CHECK_THROWS_AS(nse_required_time_exponent(rat(3, 2)), ExponentOutOfRange);
}

TEST_CASE("inviscid gradient verdict") {
  Verdict v = euler_gradient_verdict({rat(3), rat(9, 5)});
  CHECK(v.level == VerdictLevel::EnergyEquality);
  CHECK(v.citation == "Thm1.1");
  CHECK(v.witness.time_exp == rat(3));
  CHECK(v.witness.space_exp == rat(9, 5));

  // Below the curve in time.
  CHECK(euler_gradient_verdict({rat(3) - rat(1, 100), rat(9, 5)}).level ==
        VerdictLevel::Inconclusive);
  // Below 9/5 in space: no inviscid conclusion no matter how much time decay.
  CHECK(euler_gradient_verdict({inf, rat(9, 5) - rat(1, 1000)}).level ==
        VerdictLevel::Inconclusive);
  // The inviscid criterion never upgrades beyond energy equality.
  CHECK(euler_gradient_verdict({inf, inf}).level == VerdictLevel::EnergyEquality);
  CHECK_THROWS_AS(euler_gradient_verdict({inf, rat(6, 5)}), ExponentOutOfRange);
}

TEST_CASE("viscous gradient verdict distinguishes its three regions") {
  // Scale-invariant class: strong solution.
  Verdict strong = nse_gradient_verdict({inf, rat(3, 2) + rat(1, 100)});
  CHECK(strong.level == VerdictLevel::StrongSolution);
  CHECK(strong.citation == "ScalingNabla");

  Verdict low = nse_gradient_verdict({rat(8), rat(8, 5)});
  CHECK(low.level == VerdictLevel::EnergyEquality);
  CHECK(low.citation == "Thm1.5i");

  Verdict high = nse_gradient_verdict({rat(5, 2), rat(2)});
  CHECK(high.level == VerdictLevel::EnergyEquality);
  CHECK(high.citation == "Thm1.5ii");

  CHECK(nse_gradient_verdict({rat(2), rat(8, 5)}).level == VerdictLevel::Inconclusive);
  CHECK_THROWS_AS(nse_gradient_verdict({rat(100), rat(3, 2)}), ExponentOutOfRange);
}

TEST_CASE("viscous energy branch is continuous at q = 9/5") {
  // p_req = 3 approached from both sides.
  ExtRational eps(1, 1000000);
  ExtRational below = nse_required_time_exponent(rat(9, 5) - eps);
  ExtRational above = nse_required_time_exponent(rat(9, 5) + eps);
  CHECK(below > rat(3));
  CHECK(above < rat(3));
  CHECK(below - rat(3) < rat(1, 100000));
  CHECK(rat(3) - above < rat(1, 100000));
}

TEST_CASE("energy verdicts are monotone under embeddings") {
  // If a class certifies, every stronger class certifies as well: check
  // along a grid of exponent pairs sitting exactly on the curve.
  for (int qi = 19; qi <= 40; ++qi) {
    ExtRational q(qi, 10);
    ExtRational p = euler_required_time_exponent(q);
    CHECK(euler_gradient_verdict({p, q}).level == VerdictLevel::EnergyEquality);
    CHECK(euler_gradient_verdict({p + rat(1, 7), q}).level == VerdictLevel::EnergyEquality);
    ExtRational q2 = q + rat(1, 3);
    CHECK(euler_gradient_verdict({p, q2}).level == VerdictLevel::EnergyEquality);
  }
}

TEST_CASE("curl bound transfers except on slip domains with handles") {
  BochnerSpec s{rat(3), rat(2)};
  DomainMeta noslip{BoundaryCondition::NoSlip, false};
  DomainMeta slip_ball{BoundaryCondition::Slip, true};
  DomainMeta slip_torus{BoundaryCondition::Slip, false};
  CHECK(curl_to_gradient(s, noslip) == s);
  CHECK(curl_to_gradient(s, slip_ball) == s);
  CHECK_THROWS_AS(curl_to_gradient(s, slip_torus), TopologyObstruction);
}

TEST_CASE("scale-invariant regularity class membership") {
  CHECK(regularity_class({inf, rat(3, 2) + rat(1, 1000)}));
  CHECK(regularity_class({rat(2), inf}));
  CHECK(regularity_class({rat(4), rat(3)}));
  CHECK(regularity_class({rat(2), rat(3)}));  // boundary level 2 included
  CHECK_FALSE(regularity_class({rat(100), rat(3, 2)}));  // q not above 3/2
  CHECK_FALSE(regularity_class({rat(2), rat(2)}));       // level 5/2
}
