#include "ciani/conductor.hpp"

#include <algorithm>

#include "ciani/algebra.hpp"
#include "ciani/padic.hpp"

namespace ciani {

namespace {

int twist_count(int splitting_degree) {
  switch (splitting_degree) {
    case 1: return 4;
    case 2: return 2;
    case 3: return 1;
    default: throw Error(ErrorKind::internal, "splitting degree out of range");
  }
}

long hyper_table(long e, int degree) {
  if (e % 2 != 0) return degree == 2 ? 2 : 6;
  return degree == 1 ? 0 : 4;
}

void gate(const CianiTuple& t, const mpz_class& p) {
  require_prime(p);
  if (p <= 3) throw Error(ErrorKind::bad_prime, "tame hypothesis p > 3 required");
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");
  if (q_invariant(t).is_zero())
    throw Error(ErrorKind::special_curve,
                "special Ciani curve: conductor not covered by this method");
}

// Root valuations of the resolvent of a normalised good-quartic tuple,
// sorted decreasing and padded with the zero root's slot removed. Only
// meaningful when the resolvent splits over the maximal unramified
// extension, where they are integers.
struct RootValuations {
  std::vector<long> finite;  // one entry per nonzero root, decreasing
  int zero_roots = 0;
  bool all_even() const {
    for (long v : finite)
      if (v % 2 != 0) return false;
    return true;
  }
  long sum() const {
    long s = 0;
    for (long v : finite) s += v;
    return s;
  }
};

RootValuations resolvent_root_valuations(const CubicPoly& f, const mpz_class& p) {
  NewtonPolygon np = newton_polygon({Valuation(0), val_p_unchecked(f.S1, p),
                                     val_p_unchecked(f.S2, p), val_p_unchecked(f.S3, p)});
  RootValuations rv;
  rv.zero_roots = np.zero_roots;
  for (const auto& seg : np.segments) {
    if (!seg.slope.is_integer())
      throw Error(ErrorKind::internal, "split resolvent with fractional root valuation");
    for (int k = 0; k < seg.length; ++k) rv.finite.push_back(Valuation(seg.slope).to_long());
  }
  std::sort(rv.finite.rbegin(), rv.finite.rend());
  return rv;
}

}  // namespace

GoodModelCertificate good_model(const CianiTuple& t, const mpz_class& p) {
  gate(t, p);
  ReductionType red = classify(t, p);
  if (red.kind != ReductionKind::good_quartic)
    throw Error(ErrorKind::internal, "good model certificate requires good quartic reduction");
  if (splitting_degree_nr(resolvent(t), p) != 1)
    throw Error(ErrorKind::internal, "good model certificate requires a split resolvent");

  NormalizedProfile prof = normalize_at(t, p);
  const CianiTuple& tn = *prof.tuple;
  CubicPoly f = resolvent(tn);
  Rational P = p_invariant(tn);
  Valuation nu_delta = val_p_unchecked(discriminant(tn), p);

  RootValuations rv = resolvent_root_valuations(f, p);
  if (!rv.all_even())
    throw Error(ErrorKind::internal, "good model certificate requires even root valuations");

  GoodModelCertificate cert;
  cert.base_case = P.is_zero() ? ReconsCase::B : ReconsCase::A;
  Rational nu_base;
  if (P.is_zero()) {
    // Resolvent T (T^2 - S1 T + S2): rescale x by the combined exponent of
    // the two finite roots, y and z by their own.
    if (rv.zero_roots != 1 || rv.finite.size() != 2)
      throw Error(ErrorKind::internal, "unexpected root pattern in case B");
    nu_base = val_p_unchecked(f.S2, p).value();
    cert.rescale_exponents = {Rational(rv.finite[0] + rv.finite[1]) / Rational(4),
                              Rational(rv.finite[0]) / Rational(4),
                              Rational(rv.finite[1]) / Rational(4)};
  } else {
    if (rv.zero_roots != 0 || rv.finite.size() != 3)
      throw Error(ErrorKind::internal, "unexpected root pattern in case A");
    long nuP = val_p_unchecked(P, p).to_long();
    if (rv.sum() != 2 * nuP)
      throw Error(ErrorKind::internal, "root valuations do not sum to 2 v(P)");
    nu_base = Rational(nuP);
    cert.rescale_exponents = {Rational(rv.finite[0]) / Rational(4),
                              Rational(rv.finite[1]) / Rational(4),
                              Rational(rv.finite[2]) / Rational(4)};
  }

  Rational exp_sum =
      cert.rescale_exponents[0] + cert.rescale_exponents[1] + cert.rescale_exponents[2];
  cert.delta_valuation =
      nu_delta + Valuation(Rational(18) * nu_base - Rational(36) * exp_sum);
  if (cert.delta_valuation != Valuation(0))
    throw Error(ErrorKind::internal, "good model certificate failed: v(Delta) != 0");

  static const char* names[3] = {"x", "y", "z"};
  std::string vars;
  for (int k = 0; k < 3; ++k) {
    if (!cert.rescale_exponents[(size_t)k].is_zero()) {
      if (!vars.empty()) vars += ",";
      vars += names[k];
    }
  }
  cert.rescaling = vars.empty() ? "none" : vars;
  return cert;
}

ConductorReport conductor(const CianiTuple& t, const mpz_class& p) {
  gate(t, p);

  NormalizedProfile prof = normalize_at(t, p);
  ConductorReport rep;
  rep.reduction = classify(t, p);
  rep.nuQ = val_p_unchecked(q_invariant(t), p) - prof.shift * Rational(6);
  rep.nuR = val_p_unchecked(r_invariant(t), p) - prof.shift * Rational(2);
  rep.splitting_degree = splitting_degree_nr(resolvent(t), p);

  switch (rep.reduction.kind) {
    case ReductionKind::good_quartic: {
      bool good_twist_exists = false;
      if (rep.splitting_degree == 1) {
        RootValuations rv = resolvent_root_valuations(resolvent(*prof.tuple), p);
        good_twist_exists = rv.all_even();
        if (rep.nuQ == Valuation(0) && !good_twist_exists)
          throw Error(ErrorKind::internal, "v(Q) = 0 must leave even root valuations");
      } else if (rep.nuQ == Valuation(0)) {
        throw Error(ErrorKind::internal, "v(Q) = 0 must split the resolvent");
      }
      if (good_twist_exists) {
        rep.per_twist = {{0, 0}, {1, 4}, {2, 4}, {3, 4}};
        rep.conductor_min = 0;
        rep.good_model = good_model(t, p);
        rep.good_field_degree = 1;
      } else {
        rep.conductor_min = 4;
        int n = twist_count(rep.splitting_degree);
        for (int k = 0; k < n; ++k) rep.per_twist.emplace_back(k, 4);
      }
      break;
    }
    case ReductionKind::good_hyperelliptic: {
      int fast = splitting_degree_fast(t, p);
      if (fast != rep.splitting_degree)
        throw Error(ErrorKind::internal, "splitting degree cross-check failed: fast=" +
                                             std::to_string(fast) +
                                             " nr=" + std::to_string(rep.splitting_degree));
      long e = rep.reduction.e;
      long f = hyper_table(e, rep.splitting_degree);
      rep.conductor_min = f;
      int n = twist_count(rep.splitting_degree);
      for (int k = 0; k < n; ++k) rep.per_twist.emplace_back(k, f);
      if (rep.splitting_degree == 2)
        rep.good_field_degree = 2;
      else
        rep.good_field_degree = (e % 2 == 0) ? rep.splitting_degree : 2 * rep.splitting_degree;
      break;
    }
    case ReductionKind::bad:
      rep.conductor_min = std::nullopt;  // positive for every model
      break;
  }
  rep.stable_field_degree_divisor = rep.splitting_degree == 3 ? 12 : 8;
  return rep;
}

OggReport ogg_check(const StandardModel& m, const mpz_class& p) {
  CianiTuple t = invariants_of(m);
  ConductorReport rep = conductor(t, p);  // gates p, smoothness, speciality
  if (rep.reduction.kind == ReductionKind::bad)
    throw Error(ErrorKind::internal,
                "discriminant bound only proved for potentially good reduction");

  OggReport out;
  out.f = *rep.conductor_min;
  out.f_exact = true;
  for (const auto& pt : rep.per_twist)
    if (pt.second != out.f) out.f_exact = false;  // f is then the minimum, a lower bound
  out.bound = val_p_unchecked(discriminant(t), p);
  out.ok = Valuation(Rational(out.f)) <= out.bound;
  return out;
}

}  // namespace ciani
