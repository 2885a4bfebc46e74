#include "ciani/invariants.hpp"

namespace ciani {

Rational discriminant(const CianiTuple& t) {
  return Rational(1048576) * t.I3 * t.I3pp.pow(4) * t.I6.pow(2);
}

Rational p_invariant(const CianiTuple& t) { return Rational(8) * t.I3 + t.I3p - t.I3pp; }

Rational i_invariant(const CianiTuple& t) {
  return (t.I3p * t.I3p - t.I6 - Rational(16) * t.I3 * t.I3pp - Rational(2) * t.I3p * t.I3pp +
          t.I3pp * t.I3pp) /
         Rational(4);
}

Rational i_invariant(const StandardModel& m) {
  auto d = pair_discriminants(m);
  return m.A * m.B * d[0] * d[1] + m.B * m.C * d[1] * d[2] + m.C * m.A * d[2] * d[0];
}

Rational q_invariant(const CianiTuple& t) {
  Rational I = i_invariant(t);
  return Rational(-4) * t.I3 * t.I3p.pow(3) * t.I6 - Rational(27) * t.I3.pow(2) * t.I6.pow(2) +
         Rational(18) * t.I3 * t.I3p * t.I6 * I + t.I3p.pow(2) * I.pow(2) - Rational(4) * I.pow(3);
}

Rational r_invariant(const CianiTuple& t) {
  Rational P = p_invariant(t);
  Rational S1 = t.I3p + Rational(12) * t.I3;
  Rational S2 = (P.pow(2) + Rational(16) * t.I3 * (P + t.I3pp) - t.I6) / Rational(4);
  return S1.pow(2) - Rational(3) * S2;
}

std::array<Rational, 3> pair_discriminants(const StandardModel& m) {
  return {m.a * m.a - Rational(4) * m.B * m.C, m.b * m.b - Rational(4) * m.A * m.C,
          m.c * m.c - Rational(4) * m.A * m.B};
}

StandardModel scale_form(const StandardModel& m, const Rational& lambda) {
  if (lambda.is_zero()) throw Error(ErrorKind::internal, "scale_form by zero");
  return {lambda * m.A, lambda * m.B, lambda * m.C, lambda * m.a, lambda * m.b, lambda * m.c};
}

StandardModel diag_transform(const StandardModel& m, const Rational& d1, const Rational& d2,
                             const Rational& d3) {
  if (d1.is_zero() || d2.is_zero() || d3.is_zero())
    throw Error(ErrorKind::internal, "diag_transform with zero determinant");
  // Every variable occurs with even exponent, so only the squares matter.
  Rational s1 = d1 * d1, s2 = d2 * d2, s3 = d3 * d3;
  return {s1 * s1 * m.A, s2 * s2 * m.B, s3 * s3 * m.C,
          s2 * s3 * m.a, s1 * s3 * m.b, s1 * s2 * m.c};
}

NormalizedProfile normalize_at(const CianiTuple& t, const mpz_class& p) {
  require_prime(p);
  if (t.I3.is_zero() && t.I3p.is_zero() && t.I3pp.is_zero() && t.I6.is_zero())
    throw Error(ErrorKind::internal, "cannot normalise the zero tuple");
  Valuation v1 = val_p_unchecked(t.I3, p), v2 = val_p_unchecked(t.I3p, p),
            v3 = val_p_unchecked(t.I3pp, p), v4 = val_p_unchecked(t.I6, p);
  Valuation m = Valuation::min(Valuation::min(v1, v2), Valuation::min(v3, v4 * Rational(1, 2)));

  NormalizedProfile out;
  out.shift = m.value();
  out.vals = {v1 - out.shift, v2 - out.shift, v3 - out.shift, v4 - (out.shift * Rational(2))};
  out.integral = out.shift.is_integer();
  if (out.integral) {
    if (!out.shift.numerator().fits_slong_p())
      throw Error(ErrorKind::internal, "normalisation shift out of range");
    Rational u = Rational(p).pow(out.shift.numerator().get_si());
    out.tuple = CianiTuple{t.I3 / u, t.I3p / u, t.I3pp / u, t.I6 / (u * u)};
  }
  return out;
}

bool projectively_equal(const CianiTuple& t1, const CianiTuple& t2) {
  if (t1.I3.is_zero() || t2.I3.is_zero())
    throw Error(ErrorKind::internal, "projective comparison needs I3 != 0");
  Rational lambda = t2.I3 / t1.I3;
  return t2.I3p == lambda * t1.I3p && t2.I3pp == lambda * t1.I3pp && t2.I6 == lambda * lambda * t1.I6;
}

bool is_special(const CianiTuple& t) {
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");
  return q_invariant(t).is_zero();
}

}  // namespace ciani
