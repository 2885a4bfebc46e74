#pragma once

#include <vector>

#include "ciani/algebra.hpp"
#include "ciani/invariants.hpp"
#include "ciani/rational.hpp"

namespace ciani {

// Newton polygon of a polynomial, reported as root valuations: a segment
// (slope v, length m) means exactly m nonzero roots of valuation v in an
// algebraic closure. Slopes are the negated slopes of the lower convex
// hull of (i, v(c_i)) and are listed strictly increasing. Roots equal to 0
// are divided out first and counted separately.
struct NewtonPolygon {
  struct Segment {
    Rational slope;
    int length;
  };
  std::vector<Segment> segments;
  int zero_roots = 0;
};

// coeffs lists valuations leading coefficient first; the leading valuation
// must be finite.
NewtonPolygon newton_polygon(const std::vector<Valuation>& coeffs);

// Degree of the splitting field of a monic cubic over the maximal
// unramified extension of Q_p, p > 3. Requires nonzero discriminant.
//
// nu(disc) = 0 gives 1 (simple roots lift), odd nu(disc) gives 2 (the
// square root of the discriminant generates the ramified quadratic); the
// remaining 1-vs-3 distinction runs an exact cluster refinement: any
// Newton slope with denominator 3 certifies a ramified cubic, and integral
// slopes are refined by translating at the multiple residual root, which
// for residual polynomials of degree <= 3 always lies in the prime field.
int splitting_degree_nr(const CubicPoly& f, const mpz_class& p);

// Same degree via the valuation criterion available on the potentially
// good hyperelliptic profile: nu(Q) odd gives 2, nu(Q) = 0 mod 6 gives 1,
// nu(Q) = 2, 4 mod 6 gives 1 when nu(Q) > 3 nu(R) and 3 otherwise.
// The valuations are those of the normalised tuple.
int splitting_degree_fast(const CianiTuple& t, const mpz_class& p);

}  // namespace ciani
