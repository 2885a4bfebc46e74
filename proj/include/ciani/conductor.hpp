#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ciani/invariants.hpp"
#include "ciani/rational.hpp"
#include "ciani/reconstruct.hpp"
#include "ciani/reduction.hpp"

namespace ciani {

// Witness that a model with good reduction over the base field exists:
// each variable is divided by p^e for the listed exponent e (a root
// valuation over 4; half-integers are fine, the resulting form is still
// K-rational because the exponent doubles in every coefficient slot), and
// the discriminant valuation of the rescaled model is certified zero
// through the exact relation
//   v(Delta(Y2)) = v(Delta(t)) + 18 v(base) - 36 (e_x + e_y + e_z),
// base = P or S2 by reconstruction case. No p-adic coefficient arithmetic
// is involved.
struct GoodModelCertificate {
  ReconsCase base_case;
  std::string rescaling;  // "none" or the rescaled variables, e.g. "x" or "y,z"
  std::array<Rational, 3> rescale_exponents{};  // for x, y, z
  Valuation delta_valuation;                    // certified 0
  std::string field_extension = "K";
};

struct ConductorReport {
  ReductionType reduction;
  bool special = false;  // special tuples are rejected, so always false
  int splitting_degree = 1;
  Valuation nuQ, nuR;  // on the normalised scale
  // Minimal conductor exponent over all models; empty means bad reduction
  // where only positivity is known.
  std::optional<long> conductor_min;
  std::vector<std::pair<int, long>> per_twist;  // (twist index, exponent)
  std::optional<GoodModelCertificate> good_model;
  int stable_field_degree_divisor = 8;  // 8, or 12 when the degree is 3
  std::optional<int> good_field_degree;  // [M:K] where unambiguous
};

// Conductor exponents of the non-special smooth tuple t at p > 3.
// Good quartic reduction: a model with good reduction over the base field
// exists exactly when the resolvent splits over the maximal unramified
// extension and its root valuations are all even (v(Q) = 0 is the special
// case where at most one root degenerates); the twists then carry
// [0, 4, 4, 4], and otherwise every twist carries 4. Good hyperelliptic
// reduction: all twists share the table value (e odd: 6, 2, 6; e even:
// 0, 4, 4 for splitting degree 1, 2, 3), the fast valuation criterion being
// cross-checked against the p-adic splitting algorithm. Bad reduction: the
// exponent is positive for every model but not computed here.
ConductorReport conductor(const CianiTuple& t, const mpz_class& p);

// Certificate for the good-reduction model; requires good quartic
// reduction with split resolvent and even root valuations.
GoodModelCertificate good_model(const CianiTuple& t, const mpz_class& p);

struct OggReport {
  long f = 0;  // conductor exponent of the model's class (lower bound when not exact)
  bool f_exact = true;  // all twists share the value
  Valuation bound;      // v_p of the model's own discriminant
  bool ok = false;      // f <= bound
};

// Discriminant bound f_p <= v_p(Delta(model)) for a smooth non-special
// model with potentially good reduction at p.
OggReport ogg_check(const StandardModel& m, const mpz_class& p);

}  // namespace ciani
