#include <doctest.h>

#include "ciani/algebra.hpp"
#include "ciani/invariants.hpp"
#include "testutil.hpp"

using namespace ciani;

namespace {
const StandardModel fermat{1, 1, 1, 0, 0, 0};
const StandardModel m013{1, 1, 1, 0, 1, 3};
const CianiTuple t_exa{1, -6, 1, 1};
}  // namespace

TEST_CASE("invariants of reference models") {
  CianiTuple t = invariants_of(fermat);
  CHECK(t == CianiTuple{1, -12, -4, -64});
  CHECK(invariants_of(m013) == CianiTuple{1, -2, 6, 60});
  CHECK(invariants_of(StandardModel{0, 0, 0, 0, 0, 0}) == CianiTuple{0, 0, 0, 0});
}

TEST_CASE("discriminant") {
  CHECK(discriminant(t_exa) == Rational(2).pow(20));
  CHECK(discriminant(CianiTuple{1, -12, -4, -64}) == Rational(2).pow(40));
  CHECK(discriminant(CianiTuple{0, 7, 3, 5}) == Rational(0));
  CHECK(is_smooth(fermat));
  CHECK(!is_smooth(StandardModel{1, 1, 1, 2, 2, 2}));  // a^2 = 4BC
}

TEST_CASE("P invariant") {
  CHECK(p_invariant(t_exa) == Rational(1));
  CHECK(p_invariant(CianiTuple{1, -2, 6, 60}) == Rational(0));
  CHECK(p_invariant(CianiTuple{0, 0, 0, 0}) == Rational(0));
}

TEST_CASE("I invariant, both routes") {
  CHECK(i_invariant(t_exa) == Rational(8));
  CHECK(i_invariant(CianiTuple{1, -12, -4, -64}) == Rational(48));
  CHECK(i_invariant(CianiTuple{0, 0, 0, 0}) == Rational(0));
  CHECK(i_invariant(fermat) == Rational(48));
  CHECK(i_invariant(m013) == Rational(-23));
  CHECK(i_invariant(StandardModel{0, 0, 0, 0, 0, 0}) == Rational(0));

  auto g = testutil::rng(11);
  for (int i = 0; i < 200; ++i) {
    StandardModel m = testutil::random_model(g);
    CianiTuple t = invariants_of(m);
    CHECK(i_invariant(m) == i_invariant(t));
    // 4I + I6 - I3'^2 + 16 I3 I3'' + 2 I3' I3'' - I3''^2 = 0
    Rational rel = Rational(4) * i_invariant(m) + t.I6 - t.I3p.pow(2) +
                   Rational(16) * t.I3 * t.I3pp + Rational(2) * t.I3p * t.I3pp - t.I3pp.pow(2);
    CHECK(rel == Rational(0));
  }
}

TEST_CASE("Q invariant equals the resolvent discriminant") {
  CHECK(q_invariant(t_exa) == Rational(229));
  CHECK(q_invariant(CianiTuple{1, -12, -4, -64}) == Rational(0));
  CHECK(q_invariant(CianiTuple{0, 0, 0, 0}) == Rational(0));

  auto g = testutil::rng(12);
  for (int i = 0; i < 200; ++i) {
    CianiTuple t = testutil::random_tuple(g, 20);
    CHECK(q_invariant(t) == cubic_discriminant(resolvent(t)));
  }
  // also with denominators
  for (int i = 0; i < 50; ++i) {
    CianiTuple t{Rational(testutil::rand_long(g, -20, 20), 1 + testutil::rand_long(g, 0, 6)),
                 Rational(testutil::rand_long(g, -20, 20), 1 + testutil::rand_long(g, 0, 6)),
                 Rational(testutil::rand_long(g, -20, 20), 1 + testutil::rand_long(g, 0, 6)),
                 Rational(testutil::rand_long(g, -20, 20), 1 + testutil::rand_long(g, 0, 6))};
    CHECK(q_invariant(t) == cubic_discriminant(resolvent(t)));
  }
}

TEST_CASE("R invariant") {
  CHECK(r_invariant(t_exa) == Rational(12));  // S1 = 6, S2 = 8
  CHECK(r_invariant(CianiTuple{0, 0, 0, 0}) == Rational(0));
  CianiTuple t = invariants_of(StandardModel{1, 1, 1, 27, 52, 77});
  CHECK(val_p(r_invariant(t), 5) >= Valuation(4));
}

TEST_CASE("pair discriminants") {
  auto d = pair_discriminants(StandardModel{1, 1, 1, 27, 52, 77});
  CHECK(d[0] == Rational(725));
  CHECK(d[1] == Rational(2700));
  CHECK(d[2] == Rational(5925));
  for (const auto& x : d) CHECK(val_p(x, 5) == Valuation(2));
  auto d2 = pair_discriminants(fermat);
  CHECK((d2[0] == Rational(-4) && d2[1] == Rational(-4) && d2[2] == Rational(-4)));
  auto d3 = pair_discriminants(StandardModel{1, 1, 1, 7, 12, 17});
  CHECK(d3[0] == Rational(45));
  CHECK(d3[1] == Rational(140));
  CHECK(d3[2] == Rational(285));
  for (const auto& x : d3) CHECK(val_p(x, 5) == Valuation(1));

  auto g = testutil::rng(13);
  for (int i = 0; i < 100; ++i) {
    StandardModel m = testutil::random_model(g);
    auto pd = pair_discriminants(m);
    CHECK(pd[0] * pd[1] * pd[2] == invariants_of(m).I6);
  }
}

TEST_CASE("scaling law") {
  StandardModel s2 = scale_form(fermat, Rational(2));
  CHECK(s2 == StandardModel{2, 2, 2, 0, 0, 0});
  CHECK(invariants_of(s2) == CianiTuple{8, -96, -32, -4096});
  CHECK(scale_form(m013, Rational(1)) == m013);
  CHECK_THROWS_AS(scale_form(m013, Rational(0)), Error);

  auto g = testutil::rng(14);
  for (int i = 0; i < 200; ++i) {
    StandardModel m = testutil::random_model(g);
    Rational lam = testutil::rand_nonzero(g, -6, 6);
    CianiTuple t = invariants_of(m), ts = invariants_of(scale_form(m, lam));
    CHECK(ts.I3 == lam.pow(3) * t.I3);
    CHECK(ts.I3p == lam.pow(3) * t.I3p);
    CHECK(ts.I3pp == lam.pow(3) * t.I3pp);
    CHECK(ts.I6 == lam.pow(6) * t.I6);
    CHECK(discriminant(ts) == lam.pow(27) * discriminant(t));
  }
  // odd/even weights under lambda = -1
  CianiTuple t = invariants_of(StandardModel{1, -1, 1, 2, 3, 5});
  CianiTuple tm = invariants_of(scale_form(StandardModel{1, -1, 1, 2, 3, 5}, Rational(-1)));
  CHECK(tm.I3 == -t.I3);
  CHECK(tm.I3p == -t.I3p);
  CHECK(tm.I3pp == -t.I3pp);
  CHECK(tm.I6 == t.I6);
}

TEST_CASE("diagonal substitution law") {
  CHECK(diag_transform(fermat, 1, 1, 1) == fermat);
  StandardModel d = diag_transform(fermat, 2, 1, 1);
  CHECK(d == StandardModel{16, 1, 1, 0, 0, 0});
  CHECK(invariants_of(d).I3 == Rational(16));  // det^4 = 16
  // sign flips act trivially: every exponent in the diagonal form is even
  StandardModel f222{1, 1, 1, 2, 2, 2};
  CHECK(diag_transform(f222, 1, 1, -1) == f222);
  CHECK(invariants_of(diag_transform(f222, 1, 1, -1)) == invariants_of(f222));
  CHECK_THROWS_AS(diag_transform(fermat, 0, 1, 1), Error);

  auto g = testutil::rng(15);
  for (int i = 0; i < 200; ++i) {
    StandardModel m = testutil::random_model(g);
    Rational d1 = testutil::rand_nonzero(g, -4, 4), d2 = testutil::rand_nonzero(g, -4, 4),
             d3 = testutil::rand_nonzero(g, -4, 4);
    Rational det = d1 * d2 * d3;
    CianiTuple t = invariants_of(m), td = invariants_of(diag_transform(m, d1, d2, d3));
    CHECK(td.I3 == det.pow(4) * t.I3);
    CHECK(td.I3p == det.pow(4) * t.I3p);
    CHECK(td.I3pp == det.pow(4) * t.I3pp);
    CHECK(td.I6 == det.pow(8) * t.I6);
    CHECK(discriminant(td) == det.pow(36) * discriminant(t));
  }
}

TEST_CASE("normalisation at a prime") {
  mpz_class p = 7;
  Rational pr{p};
  CianiTuple up{pr, pr, pr, pr * pr};
  NormalizedProfile prof = normalize_at(up, p);
  CHECK(prof.integral);
  CHECK(prof.shift == Rational(1));
  CHECK(*prof.tuple == CianiTuple{1, 1, 1, 1});

  prof = normalize_at(t_exa, 229);
  CHECK(prof.integral);
  CHECK(prof.shift == Rational(0));
  CHECK(*prof.tuple == t_exa);

  NormalizedProfile half = normalize_at(CianiTuple{pr, pr, pr, pr}, p);
  CHECK(!half.integral);
  CHECK(half.shift == Rational(1, 2));
  CHECK(half.vals[0] == Valuation(Rational(1, 2)));
  CHECK(half.vals[1] == Valuation(Rational(1, 2)));
  CHECK(half.vals[2] == Valuation(Rational(1, 2)));
  CHECK(half.vals[3] == Valuation(0));

  CHECK_THROWS_AS(normalize_at(CianiTuple{0, 0, 0, 0}, p), Error);

  auto g = testutil::rng(16);
  for (int i = 0; i < 100; ++i) {
    StandardModel m = testutil::random_smooth_model(g);
    CianiTuple t = invariants_of(m);
    // sprinkle p powers
    t = CianiTuple{t.I3 * pr.pow(testutil::rand_long(g, -2, 3)), t.I3p,
                   t.I3pp * pr.pow(testutil::rand_long(g, 0, 2)),
                   t.I6 * pr.pow(testutil::rand_long(g, -1, 4))};
    NormalizedProfile pr1 = normalize_at(t, p);
    Valuation mn = Valuation::min(
        Valuation::min(pr1.vals[0], pr1.vals[1]),
        Valuation::min(pr1.vals[2], pr1.vals[3] * Rational(1, 2)));
    CHECK(mn == Valuation(0));
    for (const auto& v : pr1.vals) CHECK(v >= Valuation(0));
    if (pr1.integral) {
      NormalizedProfile pr2 = normalize_at(*pr1.tuple, p);
      CHECK(pr2.shift == Rational(0));
      CHECK(*pr2.tuple == *pr1.tuple);  // idempotent
      if (!pr1.tuple->I3.is_zero() && !t.I3.is_zero())
        CHECK(projectively_equal(t, *pr1.tuple));
    }
  }
}

TEST_CASE("projective equality in P(1,1,1,2)") {
  CHECK(projectively_equal(CianiTuple{1, -2, 6, 60}, CianiTuple{81, -162, 486, 393660}));
  CHECK(projectively_equal(t_exa, t_exa));
  CHECK(!projectively_equal(t_exa, CianiTuple{1, -6, 1, 2}));
  CHECK_THROWS_AS(projectively_equal(CianiTuple{0, 1, 1, 1}, t_exa), Error);
}

TEST_CASE("speciality test") {
  CHECK(!is_special(t_exa));
  CHECK(is_special(invariants_of(StandardModel{1, 1, 1, 1, 1, 3})));
  CHECK(is_special(CianiTuple{1, -12, -4, -64}));
  CHECK_THROWS_AS(is_special(CianiTuple{0, 1, 1, 1}), Error);

  // two-parameter family x^4 + y^4 + z^4 + r z^2 (x^2 + y^2) + s x^2 y^2
  auto g = testutil::rng(17);
  for (int i = 0; i < 60; ++i) {
    Rational r = testutil::rand_rational(g, -9, 9), s = testutil::rand_rational(g, -9, 9);
    StandardModel m{1, 1, 1, r, r, s};
    if (!is_smooth(m)) continue;
    CHECK(is_special(invariants_of(m)));
  }
}
