#include <doctest.h>

#include "ciani/conductor.hpp"
#include "ciani/padic.hpp"
#include "testutil.hpp"

using namespace ciani;

namespace {
const CianiTuple t_exa{1, -6, 1, 1};

bool all_twists_equal(const ConductorReport& rep, long f) {
  for (const auto& pt : rep.per_twist)
    if (pt.second != f) return false;
  return true;
}
}  // namespace

TEST_CASE("conductor of the worked example") {
  ConductorReport rep = conductor(t_exa, 229);
  CHECK(rep.reduction.kind == ReductionKind::good_quartic);
  CHECK(rep.nuQ == Valuation(1));
  CHECK(rep.splitting_degree == 2);
  REQUIRE(rep.conductor_min.has_value());
  CHECK(*rep.conductor_min == 4);
  REQUIRE(rep.per_twist.size() == 2);
  CHECK(all_twists_equal(rep, 4));
  CHECK(rep.stable_field_degree_divisor == 8);
  CHECK(!rep.good_model.has_value());
  CHECK(!rep.good_field_degree.has_value());

  for (long p : {5L, 7L, 11L, 13L, 101L}) {
    ConductorReport r = conductor(t_exa, p);
    CHECK(r.reduction.kind == ReductionKind::good_quartic);
    CHECK(r.nuQ == Valuation(0));
    CHECK(r.splitting_degree == 1);
    REQUIRE(r.conductor_min.has_value());
    CHECK(*r.conductor_min == 0);
    REQUIRE(r.per_twist.size() == 4);
    CHECK(r.per_twist[0].second == 0);
    CHECK(r.per_twist[1].second == 4);
    CHECK(r.per_twist[2].second == 4);
    CHECK(r.per_twist[3].second == 4);
    REQUIRE(r.good_model.has_value());
    CHECK(r.good_model->rescaling == "none");
    CHECK(r.good_model->delta_valuation == Valuation(0));
    CHECK(r.good_field_degree == 1);
  }
}

TEST_CASE("hyperelliptic conductor table, rational-root families") {
  CianiTuple t1 = invariants_of(StandardModel{1, 1, 1, 7, 12, 17});  // e = 1
  ConductorReport r1 = conductor(t1, 5);
  CHECK(r1.reduction.kind == ReductionKind::good_hyperelliptic);
  CHECK(r1.reduction.e == 1);
  CHECK(r1.splitting_degree == 1);
  CHECK(*r1.conductor_min == 6);
  CHECK(r1.per_twist.size() == 4);
  CHECK(all_twists_equal(r1, 6));
  CHECK(r1.good_field_degree == 2);  // quadratic over L = K

  CianiTuple t2 = invariants_of(StandardModel{1, 1, 1, 27, 52, 77});  // e = 2
  ConductorReport r2 = conductor(t2, 5);
  CHECK(r2.reduction.kind == ReductionKind::good_hyperelliptic);
  CHECK(r2.reduction.e == 2);
  CHECK(r2.splitting_degree == 1);
  CHECK(*r2.conductor_min == 0);
  CHECK(all_twists_equal(r2, 0));
  CHECK(r2.good_field_degree == 1);
}

TEST_CASE("bad reduction reports positive-unknown") {
  CianiTuple t{1, 5, 5, 25};
  REQUIRE(!q_invariant(t).is_zero());
  ConductorReport rep = conductor(t, 5);
  CHECK(rep.reduction.kind == ReductionKind::bad);
  CHECK(!rep.conductor_min.has_value());
  CHECK(rep.per_twist.empty());

  CianiTuple half{5, 5, 5, 5};
  REQUIRE(!q_invariant(half).is_zero());
  ConductorReport rh = conductor(half, 5);
  CHECK(rh.reduction.kind == ReductionKind::bad);
  CHECK(rh.reduction.reason == BadReason::non_integral_normalisation);
  CHECK(!rh.conductor_min.has_value());
}

TEST_CASE("conductor gates") {
  CHECK_THROWS_AS(conductor(t_exa, 3), Error);
  CHECK_THROWS_AS(conductor(CianiTuple{0, 1, 1, 1}, 5), Error);
  // special curve rejected with the dedicated kind
  try {
    conductor(CianiTuple{1, -12, -4, -64}, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::special_curve);
  }
}

TEST_CASE("good model certificate with rescaling") {
  // model (1,1,2,5,2,1): v_5(P) = 1, v_5(Q) = 0, v_5(Delta) = 0
  CianiTuple t = invariants_of(StandardModel{1, 1, 2, 5, 2, 1});
  REQUIRE(val_p(discriminant(t), 5) == Valuation(0));
  REQUIRE(val_p(q_invariant(t), 5) == Valuation(0));
  REQUIRE(val_p(p_invariant(t), 5) == Valuation(1));
  GoodModelCertificate cert = good_model(t, 5);
  CHECK(cert.base_case == ReconsCase::A);
  CHECK(cert.rescaling == "x");
  CHECK(cert.rescale_exponents[0] == Rational(1, 2));
  CHECK(cert.rescale_exponents[1] == Rational(0));
  CHECK(cert.rescale_exponents[2] == Rational(0));
  CHECK(cert.delta_valuation == Valuation(0));

  CHECK_THROWS_AS(good_model(t_exa, 2), Error);    // p > 3 gate
  CHECK_THROWS_AS(good_model(t_exa, 229), Error);  // degree 2 at 229

  // split resolvent with positive even root valuations: v(Q) > 0 yet a
  // K-model with good reduction exists (the model itself here)
  CianiTuple te = invariants_of(StandardModel{1, 6, 11, 1, 1, 1});
  REQUIRE(val_p(discriminant(te), 5) == Valuation(0));
  REQUIRE(val_p(q_invariant(te), 5) == Valuation(6));
  GoodModelCertificate ce = good_model(te, 5);
  CHECK(ce.rescaling == "none");
  CHECK(ce.delta_valuation == Valuation(0));
  ConductorReport re = conductor(te, 5);
  CHECK(*re.conductor_min == 0);
  CHECK(re.per_twist.size() == 4);

  // even positive pattern (0, 2, 2): the x-twist rescaling certificate
  CianiTuple tv = invariants_of(StandardModel{-7, -8, 3, -1, -5, 5});
  REQUIRE(val_p(discriminant(tv), 5) == Valuation(0));
  REQUIRE(val_p(q_invariant(tv), 5) == Valuation(4));
  GoodModelCertificate cv = good_model(tv, 5);
  CHECK(cv.rescaling == "x,y");  // valuations sorted decreasing onto x, y, z
  CHECK(cv.rescale_exponents[0] == Rational(1, 2));
  CHECK(cv.rescale_exponents[1] == Rational(1, 2));
  CHECK(cv.rescale_exponents[2] == Rational(0));
  CHECK(cv.delta_valuation == Valuation(0));
  CHECK(*conductor(tv, 5).conductor_min == 0);
}

TEST_CASE("conductor_min = 0 exactly for the good-model cases") {
  auto g = testutil::rng(61);
  mpz_class p = 5;
  Rational pr{p};
  int seen = 0;
  while (seen < 120) {
    CianiTuple t;
    if (seen % 2 == 0) {
      t = invariants_of(testutil::random_smooth_model(g));
    } else {
      long e = testutil::rand_long(g, 1, 2);
      t = CianiTuple{testutil::rand_nonzero(g, 1, 4),
                     testutil::rand_rational(g, -20, 20) * pr.pow(e),
                     testutil::rand_nonzero(g, -20, 20) * pr.pow(2 * e),
                     testutil::rand_nonzero(g, -20, 20) * pr.pow(3 * e)};
    }
    if (discriminant(t).is_zero() || q_invariant(t).is_zero()) continue;
    ConductorReport rep = conductor(t, p);
    ++seen;
    if (rep.reduction.kind == ReductionKind::bad) continue;
    bool zero = *rep.conductor_min == 0;
    // independent route to "split with even root valuations"
    bool quartic_good = false;
    if (rep.reduction.kind == ReductionKind::good_quartic && rep.splitting_degree == 1) {
      CubicPoly f = resolvent(*normalize_at(t, p).tuple);
      NewtonPolygon np = newton_polygon(
          {Valuation(0), val_p(f.S1, p), val_p(f.S2, p), val_p(f.S3, p)});
      quartic_good = true;
      for (const auto& seg : np.segments)
        quartic_good = quartic_good && seg.slope.is_integer() &&
                       seg.slope.numerator() % 2 == 0;
    }
    if (rep.reduction.kind == ReductionKind::good_quartic && rep.nuQ == Valuation(0))
      CHECK(quartic_good);  // the published criterion is the degenerate case
    bool hyper_good = rep.reduction.kind == ReductionKind::good_hyperelliptic &&
                      rep.reduction.e % 2 == 0 && rep.splitting_degree == 1;
    CHECK(zero == (quartic_good || hyper_good));
    // the valuation reformulation of "e even and the resolvent splits"
    if (rep.reduction.kind == ReductionKind::good_hyperelliptic) {
      long nuQ = rep.nuQ.to_long();
      long r6 = ((nuQ % 6) + 6) % 6;
      bool split_by_valuations =
          (r6 % 2 == 0) &&
          (r6 == 0 || Valuation(Rational(nuQ)) > rep.nuR * Rational(3));
      CHECK(split_by_valuations == (rep.splitting_degree == 1));
      CHECK(zero == (rep.reduction.e % 2 == 0 && split_by_valuations));
    }
    // every twist exponent is one of 0, 2, 4, 6 and even
    for (const auto& pt : rep.per_twist) {
      CHECK(pt.second >= 0);
      CHECK(pt.second <= 6);
      CHECK(pt.second % 2 == 0);
    }
  }
}

TEST_CASE("discriminant bounds the conductor") {
  OggReport o = ogg_check(StandardModel{1, 1, 1, 7, 12, 17}, 5);
  CHECK(o.f == 6);
  CHECK(o.f_exact);
  CHECK(o.bound == Valuation(14));  // 4 v(I3'') + 2 v(I6) = 8 + 6
  CHECK(o.ok);

  o = ogg_check(StandardModel{1, 1, 1, 27, 52, 77}, 5);
  CHECK(o.f == 0);
  CHECK(o.ok);

  // a p-integral model with v_p(Delta(model)) = 0 always has a twist with
  // good reduction, so f = 0 there even when v(Q) > 0
  auto g = testutil::rng(62);
  mpz_class p = 5;
  bool found = false;
  for (int i = 0; i < 5000 && !found; ++i) {
    StandardModel m = testutil::random_smooth_model(g);
    CianiTuple t = invariants_of(m);
    if (q_invariant(t).is_zero()) continue;
    if (val_p(discriminant(t), p) != Valuation(0)) continue;
    if (val_p(q_invariant(t), p) == Valuation(0)) continue;
    OggReport r = ogg_check(m, p);
    CHECK(r.f == 0);
    CHECK(!r.f_exact);  // [0, 4, 4, 4]
    CHECK(r.ok);
    found = true;
  }
  CHECK(found);

  // good quartic type with conductor 4 for every twist: the integral model
  // then has v(Delta) = 9 * normalisation shift >= 6
  bool found4 = false;
  for (int i = 0; i < 20000 && !found4; ++i) {
    StandardModel m = testutil::random_smooth_model(g);
    CianiTuple t = invariants_of(m);
    if (q_invariant(t).is_zero()) continue;
    ReductionType red = classify(t, p);
    if (red.kind != ReductionKind::good_quartic) continue;
    ConductorReport rep = conductor(t, p);
    if (*rep.conductor_min != 4) continue;
    OggReport r = ogg_check(m, p);
    CHECK(r.f == 4);
    CHECK(r.f_exact);
    CHECK(r.ok);
    CHECK(r.bound >= Valuation(6));
    found4 = true;
  }
  CHECK(found4);

  // bad reduction is rejected
  bool rejected = false;
  for (int i = 0; i < 5000 && !rejected; ++i) {
    StandardModel m = testutil::random_smooth_model(g);
    CianiTuple t = invariants_of(m);
    if (q_invariant(t).is_zero()) continue;
    if (classify(t, p).kind != ReductionKind::bad) continue;
    CHECK_THROWS_AS(ogg_check(m, p), Error);
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("conductor is well defined on the weighted projective class") {
  auto g = testutil::rng(64);
  mpz_class p = 5;
  Rational pr{p};
  int seen = 0;
  while (seen < 60) {
    CianiTuple t = invariants_of(testutil::random_smooth_model(g));
    if (q_invariant(t).is_zero()) continue;
    Rational lam = testutil::rand_nonzero(g, -9, 9) * pr.pow(testutil::rand_long(g, -1, 2));
    CianiTuple ts{lam * t.I3, lam * t.I3p, lam * t.I3pp, lam * lam * t.I6};
    ConductorReport a = conductor(t, p), b = conductor(ts, p);
    CHECK(a.reduction.kind == b.reduction.kind);
    CHECK(a.splitting_degree == b.splitting_degree);
    CHECK(a.nuQ == b.nuQ);
    CHECK(a.nuR == b.nuR);
    CHECK(a.conductor_min == b.conductor_min);
    CHECK(a.per_twist == b.per_twist);
    CHECK(a.good_field_degree == b.good_field_degree);
    // twist count always matches the splitting degree
    size_t want = a.splitting_degree == 1 ? 4 : (a.splitting_degree == 2 ? 2 : 1);
    if (a.reduction.kind != ReductionKind::bad) CHECK(a.per_twist.size() == want);
    CHECK(twists(t, p).size() == want);
    ++seen;
  }
}

TEST_CASE("vanishing I3' coordinate is handled throughout") {
  CianiTuple t{1, 0, 25, 125};  // v(I3') = infinity, hyperelliptic profile with e = 1
  REQUIRE(!discriminant(t).is_zero());
  ReductionType red = classify(t, 5);
  CHECK(red.kind == ReductionKind::good_hyperelliptic);
  CHECK(red.e == 1);
  ConductorReport rep = conductor(t, 5);  // internal fast/nr cross-check must agree
  CHECK(rep.reduction.e == 1);
  CHECK(rep.conductor_min.has_value());
}

TEST_CASE("stable field degree divisor") {
  CHECK(conductor(t_exa, 5).stable_field_degree_divisor == 8);
  CHECK(conductor(t_exa, 229).stable_field_degree_divisor == 8);
  // splitting degree 3 gives 12; find one on the hyperelliptic profile
  auto g = testutil::rng(63);
  mpz_class p = 5;
  Rational pr{p};
  bool found = false;
  for (int i = 0; i < 20000 && !found; ++i) {
    long e = testutil::rand_long(g, 1, 2);
    CianiTuple t{testutil::rand_nonzero(g, 1, 4),
                 testutil::rand_rational(g, -20, 20) * pr.pow(e),
                 testutil::rand_nonzero(g, -20, 20) * pr.pow(2 * e),
                 testutil::rand_nonzero(g, -20, 20) * pr.pow(3 * e)};
    if (discriminant(t).is_zero() || q_invariant(t).is_zero()) continue;
    if (classify(t, p).kind != ReductionKind::good_hyperelliptic) continue;
    ConductorReport rep = conductor(t, p);
    if (rep.splitting_degree == 3) {
      CHECK(rep.stable_field_degree_divisor == 12);
      CHECK(rep.per_twist.size() == 1);
      found = true;
    }
  }
  CHECK(found);
}
