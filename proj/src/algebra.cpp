#include "ciani/algebra.hpp"

#include <algorithm>
#include <map>

namespace ciani {

CubicPoly resolvent(const CianiTuple& t) {
  Rational P = p_invariant(t);
  CubicPoly f;
  f.S1 = t.I3p + Rational(12) * t.I3;
  f.S2 = (P * P + Rational(16) * t.I3 * (P + t.I3pp) - t.I6) / Rational(4);
  f.S3 = t.I3 * P * P;
  return f;
}

Rational cubic_discriminant(const CubicPoly& f) {
  const Rational &s1 = f.S1, &s2 = f.S2, &s3 = f.S3;
  return s1 * s1 * s2 * s2 - Rational(4) * s2.pow(3) - Rational(4) * s1.pow(3) * s3 +
         Rational(18) * s1 * s2 * s3 - Rational(27) * s3 * s3;
}

Rational eval_cubic(const CubicPoly& f, const Rational& x) {
  return ((x - f.S1) * x + f.S2) * x - f.S3;
}

bool is_square(const Rational& q, Rational* root) {
  if (q.sign() < 0) return false;
  mpz_class num = q.numerator(), den = q.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(rn, rd);
  }
  return true;
}

namespace {

mpz_class eval_monic_int_cubic(const mpz_class& a2, const mpz_class& a1, const mpz_class& a0,
                               const mpz_class& x) {
  return ((x + a2) * x + a1) * x + a0;
}

// Integer roots of U^3 + a2 U^2 + a1 U + a0 via bisection on the monotone
// pieces cut out by the critical points of the derivative.
std::vector<mpz_class> integer_roots_monic_cubic(const mpz_class& a2, const mpz_class& a1,
                                                 const mpz_class& a0) {
  std::vector<mpz_class> roots;
  auto g = [&](const mpz_class& x) { return eval_monic_int_cubic(a2, a1, a0, x); };
  auto check = [&](const mpz_class& x) {
    if (g(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
  };
  // Cauchy bound for a monic cubic.
  mpz_class B = 1 + std::max(::abs(a2), std::max(::abs(a1), ::abs(a0)));

  auto bisect = [&](mpz_class lo, mpz_class hi) {
    // g monotone on [lo, hi].
    check(lo);
    check(hi);
    if (sgn(g(lo)) == sgn(g(hi))) return;
    bool increasing = g(lo) < g(hi);
    while (hi - lo > 1) {
      mpz_class mid = (lo + hi) / 2;  // floor toward -inf irrelevant: lo<hi so fine
      mpz_class v = g(mid);
      if (v == 0) {
        check(mid);
        return;
      }
      if ((v < 0) == increasing)
        lo = mid;
      else
        hi = mid;
    }
  };

  // g' = 3U^2 + 2 a2 U + a1; real critical points iff a2^2 - 3 a1 > 0.
  mpz_class D = a2 * a2 - 3 * a1;
  if (D <= 0) {
    bisect(-B, B);
  } else {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());  // floor sqrt
    // Integer brackets around the critical points (-a2 -+ sqrt(D)) / 3.
    mpz_class lo1, hi1, lo2, hi2;
    mpz_fdiv_q_ui(lo1.get_mpz_t(), mpz_class(-a2 - s - 1).get_mpz_t(), 3);
    mpz_cdiv_q_ui(hi1.get_mpz_t(), mpz_class(-a2 - s).get_mpz_t(), 3);
    mpz_fdiv_q_ui(lo2.get_mpz_t(), mpz_class(-a2 + s).get_mpz_t(), 3);
    mpz_cdiv_q_ui(hi2.get_mpz_t(), mpz_class(-a2 + s + 1).get_mpz_t(), 3);
    // lo1 <= x- <= hi1 and lo2 <= x+ <= hi2; scan the short gaps directly.
    for (mpz_class x = lo1; x <= hi1; x = x + 1) check(x);
    for (mpz_class x = lo2; x <= hi2; x = x + 1) check(x);
    if (-B < lo1) bisect(-B, lo1);
    if (hi1 < lo2) bisect(hi1, lo2);
    if (hi2 < B) bisect(hi2, B);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

CubicFactorisation factor_cubic(const CubicPoly& f) {
  // Clear denominators: T = U/d turns the cubic into a monic integer cubic
  // U^3 - d S1 U^2 + d^2 S2 U - d^3 S3 whose rational roots are integers.
  mpz_class d = 1;
  mpz_lcm(d.get_mpz_t(), f.S1.denominator().get_mpz_t(), f.S2.denominator().get_mpz_t());
  mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), f.S3.denominator().get_mpz_t());
  Rational dr{d};
  mpz_class a2 = (-(dr * f.S1)).numerator();
  mpz_class a1 = (dr * dr * f.S2).numerator();
  mpz_class a0 = (-(dr.pow(3) * f.S3)).numerator();

  CubicFactorisation out;
  out.pair_sum = Rational(0);
  out.pair_product = Rational(0);
  auto int_roots = integer_roots_monic_cubic(a2, a1, a0);
  if (int_roots.empty()) return out;  // irreducible over Q

  // Deflate by one root; the remaining monic integer quadratic decides.
  mpz_class r = int_roots.front();
  mpz_class beta = a2 + r;        // U^2 + beta U + gamma
  mpz_class gamma = a1 + beta * r;
  mpz_class disc = beta * beta - 4 * gamma;
  Rational root1 = Rational(r) / dr;
  if (mpz_perfect_square_p(disc.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    out.roots = {root1, Rational(mpz_class(-beta - s), mpz_class(2)) / dr,
                 Rational(mpz_class(-beta + s), mpz_class(2)) / dr};
    std::sort(out.roots.begin(), out.roots.end());
  } else {
    out.roots = {root1};
    out.pair_sum = Rational(mpz_class(-beta)) / dr;
    out.pair_product = Rational(gamma) / (dr * dr);
  }
  return out;
}

namespace {

using Mono = std::pair<int, int>;  // exponents of (x, y)
using PolyXY = std::map<Mono, Rational>;

void add_term(PolyXY& P, int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = P.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) P.erase(it);
  }
}

// Normal form under  y^2 = S1 y + S1 x - x^2 - x y - S2  and
// x^3 = S1 x^2 - S2 x + S3.
std::array<Rational, 6> reduce_poly(PolyXY P, const CubicPoly& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = P.begin(); it != P.end(); ++it) {
      auto [i, j] = it->first;
      if (j >= 2) {
        Rational c = it->second;
        P.erase(it);
        add_term(P, i, j - 1, f.S1 * c);
        add_term(P, i + 1, j - 2, f.S1 * c);
        add_term(P, i + 2, j - 2, -c);
        add_term(P, i + 1, j - 1, -c);
        add_term(P, i, j - 2, -f.S2 * c);
        changed = true;
        break;
      }
    }
  }
  changed = true;
  while (changed) {
    changed = false;
    for (auto it = P.begin(); it != P.end(); ++it) {
      auto [i, j] = it->first;
      if (i >= 3) {
        Rational c = it->second;
        P.erase(it);
        add_term(P, i - 1, j, f.S1 * c);
        add_term(P, i - 2, j, -f.S2 * c);
        add_term(P, i - 3, j, f.S3 * c);
        changed = true;
        break;
      }
    }
  }
  std::array<Rational, 6> out{};
  for (auto& [mono, c] : P) out[mono.first + 3 * mono.second] = c;
  return out;
}

void require_same_cubic(const SplittingElement& a, const SplittingElement& b) {
  if (!(a.defining() == b.defining()))
    throw Error(ErrorKind::internal, "splitting algebra elements over different cubics");
}

}  // namespace

SplittingElement::SplittingElement(const CubicPoly& f, const Rational& constant) : f_(f), c_{} {
  c_[0] = constant;
}

SplittingElement SplittingElement::root_x(const CubicPoly& f) {
  std::array<Rational, 6> c{};
  c[1] = Rational(1);
  return SplittingElement(f, c);
}

SplittingElement SplittingElement::root_y(const CubicPoly& f) {
  std::array<Rational, 6> c{};
  c[3] = Rational(1);
  return SplittingElement(f, c);
}

SplittingElement SplittingElement::root_z(const CubicPoly& f) {
  std::array<Rational, 6> c{};
  c[0] = f.S1;
  c[1] = Rational(-1);
  c[3] = Rational(-1);
  return SplittingElement(f, c);
}

bool SplittingElement::is_rational() const {
  for (int k = 1; k < 6; ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

SplittingElement SplittingElement::operator-() const {
  auto c = c_;
  for (auto& v : c) v = -v;
  return SplittingElement(f_, c);
}

SplittingElement operator+(const SplittingElement& a, const SplittingElement& b) {
  require_same_cubic(a, b);
  auto c = a.c_;
  for (int k = 0; k < 6; ++k) c[k] += b.c_[k];
  return SplittingElement(a.f_, c);
}

SplittingElement operator-(const SplittingElement& a, const SplittingElement& b) {
  require_same_cubic(a, b);
  auto c = a.c_;
  for (int k = 0; k < 6; ++k) c[k] -= b.c_[k];
  return SplittingElement(a.f_, c);
}

SplittingElement operator*(const SplittingElement& a, const SplittingElement& b) {
  require_same_cubic(a, b);
  PolyXY prod;
  for (int k = 0; k < 6; ++k) {
    if (a.c_[k].is_zero()) continue;
    for (int l = 0; l < 6; ++l) {
      if (b.c_[l].is_zero()) continue;
      add_term(prod, (k % 3) + (l % 3), (k / 3) + (l / 3), a.c_[k] * b.c_[l]);
    }
  }
  return SplittingElement(a.f_, reduce_poly(std::move(prod), a.f_));
}

SplittingElement operator*(const Rational& s, const SplittingElement& a) {
  auto c = a.c_;
  for (auto& v : c) v = s * v;
  return SplittingElement(a.f_, c);
}

bool operator==(const SplittingElement& a, const SplittingElement& b) {
  require_same_cubic(a, b);
  return a.c_ == b.c_;
}

namespace {
void require_same_quadratic(const QuadElement& a, const QuadElement& b, const Rational& sa,
                            const Rational& qa, const Rational& sb, const Rational& qb) {
  (void)a;
  (void)b;
  if (sa != sb || qa != qb)
    throw Error(ErrorKind::internal, "quadratic algebra elements over different quadratics");
}
}  // namespace

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
  require_same_quadratic(a, b, a.s_, a.q_, b.s_, b.q_);
  return QuadElement(a.s_, a.q_, a.c0_ + b.c0_, a.c1_ + b.c1_);
}

QuadElement operator-(const QuadElement& a, const QuadElement& b) {
  require_same_quadratic(a, b, a.s_, a.q_, b.s_, b.q_);
  return QuadElement(a.s_, a.q_, a.c0_ - b.c0_, a.c1_ - b.c1_);
}

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
  require_same_quadratic(a, b, a.s_, a.q_, b.s_, b.q_);
  // (a0 + a1 u)(b0 + b1 u) with u^2 = s u - q.
  Rational cross = a.c1_ * b.c1_;
  return QuadElement(a.s_, a.q_, a.c0_ * b.c0_ - a.q_ * cross,
                     a.c0_ * b.c1_ + a.c1_ * b.c0_ + a.s_ * cross);
}

QuadElement operator*(const Rational& s, const QuadElement& a) {
  return QuadElement(a.s_, a.q_, s * a.c0_, s * a.c1_);
}

bool operator==(const QuadElement& a, const QuadElement& b) {
  require_same_quadratic(a, b, a.s_, a.q_, b.s_, b.q_);
  return a.c0_ == b.c0_ && a.c1_ == b.c1_;
}

}  // namespace ciani
