#pragma once

#include <array>
#include <optional>

#include "ciani/rational.hpp"

namespace ciani {

// Diagonal model  A x^4 + B y^4 + C z^4 + a y^2z^2 + b x^2z^2 + c x^2y^2
// of a Ciani quartic; the Klein four-group acts by sign flips on x, y.
// Templated over the coefficient ring so the same formulas evaluate over
// the rationals and over the root algebras used by reconstruction.
template <class R>
struct ModelT {
  R A, B, C, a, b, c;
};

// Invariant vector (I3, I3', I3'', I6) of weights (1, 1, 1, 2).
template <class R>
struct TupleT {
  R I3, I3p, I3pp, I6;
};

using StandardModel = ModelT<Rational>;
using CianiTuple = TupleT<Rational>;

inline bool operator==(const CianiTuple& s, const CianiTuple& t) {
  return s.I3 == t.I3 && s.I3p == t.I3p && s.I3pp == t.I3pp && s.I6 == t.I6;
}
inline bool operator==(const StandardModel& m, const StandardModel& n) {
  return m.A == n.A && m.B == n.B && m.C == n.C && m.a == n.a && m.b == n.b && m.c == n.c;
}

// The ring R must provide +, -, * and multiplication by Rational on the left.
template <class R>
TupleT<R> invariants_of(const ModelT<R>& m) {
  const Rational four(4);
  R da = m.a * m.a - four * (m.B * m.C);
  R db = m.b * m.b - four * (m.A * m.C);
  R dc = m.c * m.c - four * (m.A * m.B);
  R abc = m.A * (m.B * m.C);
  return TupleT<R>{
      abc,
      m.A * da + m.B * db + m.C * dc,
      m.A * (m.a * m.a) + m.B * (m.b * m.b) + m.C * (m.c * m.c) - four * abc - m.a * (m.b * m.c),
      da * (db * dc)};
}

// 2^20 I3 I3''^4 I6^2; nonzero iff a model with these invariants is smooth.
Rational discriminant(const CianiTuple& t);
inline bool is_smooth(const StandardModel& m) { return !discriminant(invariants_of(m)).is_zero(); }

// P = 8 I3 + I3' - I3''. Equals abc on a standard model.
Rational p_invariant(const CianiTuple& t);

// The degree-6 invariant I, via the linear relation
// 4I + I6 - I3'^2 + 16 I3 I3'' + 2 I3' I3'' - I3''^2 = 0.
Rational i_invariant(const CianiTuple& t);

// The same invariant evaluated directly on a model:
// AB*da*db + BC*db*dc + CA*dc*da with da = a^2-4BC etc.
Rational i_invariant(const StandardModel& m);

// Discriminant Q of the resolvent cubic, as a polynomial in the invariants:
// Q = -4 I3 I3'^3 I6 - 27 I3^2 I6^2 + 18 I3 I3' I6 I + I3'^2 I^2 - 4 I^3.
Rational q_invariant(const CianiTuple& t);

// R = S1^2 - 3 S2 for the resolvent coefficients S1, S2.
Rational r_invariant(const CianiTuple& t);

// The three factors (a^2-4BC, b^2-4AC, c^2-4AB) of I6.
std::array<Rational, 3> pair_discriminants(const StandardModel& m);

// All six coefficients multiplied by lambda (lambda != 0); degree-k
// invariants pick up lambda^k, the discriminant lambda^27.
StandardModel scale_form(const StandardModel& m, const Rational& lambda);

// Substitution x -> d1 x, y -> d2 y, z -> d3 z (all nonzero); degree-k
// invariants pick up (d1 d2 d3)^{4k/3}, the discriminant (d1 d2 d3)^36.
StandardModel diag_transform(const StandardModel& m, const Rational& d1, const Rational& d2,
                             const Rational& d3);

// Result of normalising an invariant tuple at p. The shift m is
// min(v(I3), v(I3'), v(I3''), v(I6)/2); stored valuations are those of the
// normalised tuple and satisfy min(v1, v2, v3, v4/2) = 0. When m is an
// integer the normalised tuple itself is defined over the rationals.
struct NormalizedProfile {
  std::array<Valuation, 4> vals;
  Rational shift;  // m
  bool integral = false;
  std::optional<CianiTuple> tuple;
};

NormalizedProfile normalize_at(const CianiTuple& t, const mpz_class& p);

// Equality in the weighted projective space P(1,1,1,2). Requires I3 != 0 on
// both sides (every smooth tuple has I3 != 0).
bool projectively_equal(const CianiTuple& t1, const CianiTuple& t2);

// A smooth Ciani quartic has automorphisms beyond its Ciani subgroup
// exactly when Q = 0. Requires a smooth tuple.
bool is_special(const CianiTuple& t);

}  // namespace ciani
