#include "ciani/reduction.hpp"

namespace ciani {

namespace {

bool hyper_profile(const NormalizedProfile& prof) {
  const auto& v = prof.vals;
  return prof.integral && v[0] == Valuation(0) && Valuation(0) < v[2] &&
         v[2] * Rational(3) == v[3] * Rational(2) && v[3] * Rational(2) <= v[1] * Rational(6);
}

}  // namespace

long hyper_exponent(const NormalizedProfile& profile) {
  if (!hyper_profile(profile))
    throw Error(ErrorKind::internal, "profile does not satisfy the hyperelliptic conditions");
  // 3 v(I3'') = 2 v(I6) with integral v(I6) forces 3 | v(I6).
  long v6 = profile.vals[3].to_long();
  if (v6 % 3 != 0) throw Error(ErrorKind::internal, "v(I6) not divisible by 3");
  long e = v6 / 3;
  if (e <= 0 || profile.vals[2] != Valuation(2 * e))
    throw Error(ErrorKind::internal, "inconsistent hyperelliptic exponent");
  return e;
}

ReductionType classify(const CianiTuple& t, const mpz_class& p) {
  require_prime(p);
  if (p <= 3) throw Error(ErrorKind::bad_prime, "tame hypothesis p > 3 required");
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");

  NormalizedProfile prof = normalize_at(t, p);
  if (!prof.integral) return ReductionType::bad(BadReason::non_integral_normalisation);

  const auto& v = prof.vals;
  Valuation nu_delta = v[0] + v[2] * Rational(4) + v[3] * Rational(2);
  if (nu_delta == Valuation(0)) return ReductionType::quartic();
  if (hyper_profile(prof)) return ReductionType::hyperelliptic(hyper_exponent(prof));
  return ReductionType::bad(BadReason::profile_mismatch);
}

}  // namespace ciani
