#pragma once

#include "ciani/invariants.hpp"
#include "ciani/rational.hpp"

namespace ciani {

enum class ReductionKind { good_quartic, good_hyperelliptic, bad };
enum class BadReason { non_integral_normalisation, profile_mismatch };

struct ReductionType {
  ReductionKind kind;
  long e = 0;  // good hyperelliptic only: e = v(I6)/3 = v(I3'')/2 > 0
  BadReason reason = BadReason::profile_mismatch;

  static ReductionType quartic() { return {ReductionKind::good_quartic, 0, BadReason::profile_mismatch}; }
  static ReductionType hyperelliptic(long e) {
    return {ReductionKind::good_hyperelliptic, e, BadReason::profile_mismatch};
  }
  static ReductionType bad(BadReason r) { return {ReductionKind::bad, 0, r}; }
};

// Reduction type at p > 3 of the smooth Ciani tuple t. After normalising:
// non-integral normalisation is bad; v(Delta) = 0 is good quartic;
// v(I3) = 0 with 0 < 3 v(I3'') = 2 v(I6) <= 6 v(I3') is good hyperelliptic
// with e = v(I6)/3; anything else is bad.
ReductionType classify(const CianiTuple& t, const mpz_class& p);

// e for a profile already known to satisfy the hyperelliptic conditions;
// checks them and that e is a positive integer.
long hyper_exponent(const NormalizedProfile& profile);

}  // namespace ciani
