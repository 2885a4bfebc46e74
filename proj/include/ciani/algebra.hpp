#pragma once

#include <array>
#include <vector>

#include "ciani/invariants.hpp"
#include "ciani/rational.hpp"

namespace ciani {

// Monic cubic T^3 - S1 T^2 + S2 T - S3, kept by its elementary symmetric
// functions S1, S2, S3 of the roots.
struct CubicPoly {
  Rational S1, S2, S3;
  friend bool operator==(const CubicPoly& f, const CubicPoly& g) {
    return f.S1 == g.S1 && f.S2 == g.S2 && f.S3 == g.S3;
  }
};

// Resolvent cubic of an invariant tuple:
//   S1 = I3' + 12 I3
//   S2 = (P^2 + 16 I3 (P + I3'') - I6) / 4
//   S3 = I3 P^2
// Its roots are A a^2, B b^2, C c^2 for any standard model with these
// invariants, and its discriminant is the Q invariant.
CubicPoly resolvent(const CianiTuple& t);

Rational cubic_discriminant(const CubicPoly& f);
Rational eval_cubic(const CubicPoly& f, const Rational& x);

// Exact square test; when true and root != nullptr, *root is the
// non-negative square root.
bool is_square(const Rational& q, Rational* root = nullptr);

// Factorisation of a monic cubic over the rationals.
struct CubicFactorisation {
  // All rational roots with multiplicity (size 0, 1 or 3), sorted.
  std::vector<Rational> roots;
  // When exactly one rational root exists, the conjugate pair of the
  // remaining irreducible quadratic T^2 - pair_sum T + pair_product.
  Rational pair_sum, pair_product;
  bool split() const { return roots.size() == 3; }
  bool irreducible() const { return roots.empty(); }
};
CubicFactorisation factor_cubic(const CubicPoly& f);

// Element of the rank-6 splitting algebra K[x,y]/(P(x), (P(y)-P(x))/(y-x))
// of a monic cubic P. The classes of x, y and S1-x-y behave as the three
// roots; symmetric expressions in them evaluate to rational multiples of 1.
// Basis: x^i y^j with 0 <= i <= 2, 0 <= j <= 1.
class SplittingElement {
 public:
  SplittingElement(const CubicPoly& f, const Rational& constant);
  static SplittingElement root_x(const CubicPoly& f);
  static SplittingElement root_y(const CubicPoly& f);
  static SplittingElement root_z(const CubicPoly& f);  // S1 - x - y

  const CubicPoly& defining() const { return f_; }
  const std::array<Rational, 6>& coords() const { return c_; }

  bool is_rational() const;
  // Coordinate on the basis element 1; the element's value when rational.
  const Rational& rational_value() const { return c_[0]; }

  SplittingElement operator-() const;
  friend SplittingElement operator+(const SplittingElement& a, const SplittingElement& b);
  friend SplittingElement operator-(const SplittingElement& a, const SplittingElement& b);
  friend SplittingElement operator*(const SplittingElement& a, const SplittingElement& b);
  friend SplittingElement operator*(const Rational& s, const SplittingElement& a);
  friend bool operator==(const SplittingElement& a, const SplittingElement& b);

 private:
  SplittingElement(const CubicPoly& f, std::array<Rational, 6> c) : f_(f), c_(std::move(c)) {}
  CubicPoly f_;
  std::array<Rational, 6> c_;
};

// Element c0 + c1 u of the rank-2 algebra K[u]/(u^2 - s u + q); u and s-u
// behave as the two roots of T^2 - s T + q.
class QuadElement {
 public:
  QuadElement(const Rational& s, const Rational& q, const Rational& c0, const Rational& c1)
      : s_(s), q_(q), c0_(c0), c1_(c1) {}
  static QuadElement constant(const Rational& s, const Rational& q, const Rational& v) {
    return QuadElement(s, q, v, Rational(0));
  }
  static QuadElement root_u(const Rational& s, const Rational& q) {
    return QuadElement(s, q, Rational(0), Rational(1));
  }
  static QuadElement root_conj(const Rational& s, const Rational& q) {
    return QuadElement(s, q, s, Rational(-1));
  }

  bool is_rational() const { return c1_.is_zero(); }
  const Rational& rational_value() const { return c0_; }
  const Rational& coord0() const { return c0_; }
  const Rational& coord1() const { return c1_; }

  QuadElement operator-() const { return QuadElement(s_, q_, -c0_, -c1_); }
  friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator-(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const Rational& s, const QuadElement& a);
  friend bool operator==(const QuadElement& a, const QuadElement& b);

 private:
  Rational s_, q_;   // defining quadratic T^2 - s T + q
  Rational c0_, c1_;
};

}  // namespace ciani
