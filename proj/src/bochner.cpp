#include "flowcheck/bochner.hpp"

namespace flowcheck {

bool valid(const BochnerSpec& s) {
  return s.time_exp >= ExtRational(1) && s.space_exp >= ExtRational(1);
}

BochnerSpec holder_combine(const BochnerSpec& a, const BochnerSpec& b) {
  return {(a.time_exp.reciprocal() + b.time_exp.reciprocal()).reciprocal(),
          (a.space_exp.reciprocal() + b.space_exp.reciprocal()).reciprocal()};
}

ExtRational sobolev_lift(const ExtRational& q) {
  if (q < ExtRational(1))
    throw ExponentOutOfRange("sobolev_lift requires a space exponent q >= 1, got " + q.str());
  if (q == ExtRational(3))
    throw CriticalExponent("sobolev_lift is undefined at the critical space exponent q = 3");
  if (q > ExtRational(3)) return ExtRational::infinity();
  return ExtRational(3) * q / (ExtRational(3) - q);
}

bool embeds(const BochnerSpec& a, const BochnerSpec& b) {
  return a.time_exp >= b.time_exp && a.space_exp >= b.space_exp;
}

ExtRational scaling_level(const BochnerSpec& s) {
  return ExtRational(2) * s.time_exp.reciprocal() + ExtRational(3) * s.space_exp.reciprocal();
}

}  // namespace flowcheck
