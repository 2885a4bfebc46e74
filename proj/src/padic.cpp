#include "ciani/padic.hpp"

#include <algorithm>
#include <array>

namespace ciani {

namespace {

struct HullPoint {
  long i;
  Rational v;
};

// Lower convex hull of points sorted by i (all valuations finite).
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
  std::vector<HullPoint> h;
  for (const auto& p : pts) {
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h[h.size() - 1];
      // Pop b when it lies on or above the segment a -> p.
      if ((b.v - a.v) * Rational(p.i - a.i) >= (p.v - a.v) * Rational(b.i - a.i))
        h.pop_back();
      else
        break;
    }
    h.push_back(p);
  }
  return h;
}

}  // namespace

NewtonPolygon newton_polygon(const std::vector<Valuation>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::internal, "empty coefficient list");
  if (coeffs.front().is_infinite())
    throw Error(ErrorKind::internal, "leading coefficient must have finite valuation");
  long n = (long)coeffs.size() - 1;

  // Ascending order: val[i] belongs to the coefficient of T^i.
  NewtonPolygon out;
  long z = 0;
  while (coeffs[(size_t)(n - z)].is_infinite()) ++z;  // roots equal to 0
  out.zero_roots = (int)z;

  std::vector<HullPoint> pts;
  for (long i = z; i <= n; ++i) {
    const Valuation& v = coeffs[(size_t)(n - i)];
    if (v.is_finite()) pts.push_back({i, v.value()});
  }
  auto hull = lower_hull(pts);
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    Rational sigma = (hull[k + 1].v - hull[k].v) / Rational(hull[k + 1].i - hull[k].i);
    out.segments.push_back({-sigma, (int)(hull[k + 1].i - hull[k].i)});
  }
  std::reverse(out.segments.begin(), out.segments.end());  // root valuations increasing
  return out;
}

namespace {

// --- F_p[x] helpers (coefficients ascending, reduced mod p, trimmed) ---

using FpPoly = std::vector<mpz_class>;

mpz_class fp_reduce(const mpz_class& n, const mpz_class& p) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return r;
}

// Residue of a p-integral rational.
mpz_class fp_of_rational(const Rational& r, const mpz_class& p) {
  mpz_class den = fp_reduce(r.denominator(), p), inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(ErrorKind::internal, "residue of a non-integral rational");
  return fp_reduce(fp_reduce(r.numerator(), p) * inv, p);
}

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_deg(const FpPoly& f) { return (long)f.size() - 1; }  // -1 for zero

FpPoly fp_derivative(const FpPoly& f, const mpz_class& p) {
  FpPoly d;
  for (size_t j = 1; j < f.size(); ++j) d.push_back(fp_reduce(f[j] * (long)j, p));
  fp_trim(d);
  return d;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, const mpz_class& p) {
  mpz_class lead_inv;
  mpz_invert(lead_inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
  while (fp_deg(a) >= fp_deg(b)) {
    mpz_class q = fp_reduce(a.back() * lead_inv, p);
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] = fp_reduce(a[shift + j] - q * b[j], p);
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const mpz_class& p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// --- exact cluster refinement for the 1-vs-3 decision ---

// f(T + s) on ascending coefficients of a monic polynomial.
std::array<Rational, 4> taylor_shift(const std::array<Rational, 4>& a, const Rational& s) {
  auto b = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 2; j >= i; --j) b[j] += s * b[j + 1];
  return b;
}

long ceil_div(long num, long den) { return (num + den - 1) / den; }

}  // namespace

int splitting_degree_nr(const CubicPoly& f, const mpz_class& p) {
  require_prime(p);
  if (p <= 3) throw Error(ErrorKind::bad_prime, "splitting degree requires p > 3");
  Rational disc = cubic_discriminant(f);
  if (disc.is_zero())
    throw Error(ErrorKind::internal, "splitting degree requires a separable cubic");

  long nuQ = val_p_unchecked(disc, p).to_long();
  if (nuQ == 0) return 1;  // simple roots over the residue field lift
  if (((nuQ % 2) + 2) % 2 == 1) return 2;  // sqrt(disc) generates the ramified quadratic

  // Remaining: unramified (1) versus totally ramified cubic (3).
  // Rescale T -> T / p^m so the cubic is p-integral; roots scale by p^m.
  long m = 0;
  auto widen = [&](const Rational& s, long w) {
    if (s.is_zero()) return;
    Valuation v = val_p_unchecked(s, p);
    if (v.value().sign() < 0) m = std::max(m, ceil_div(-v.to_long(), w));
  };
  widen(f.S1, 1);
  widen(f.S2, 2);
  widen(f.S3, 3);
  Rational pr{mpz_class(p)};
  std::array<Rational, 4> a = {-f.S3 * pr.pow(3 * m), f.S2 * pr.pow(2 * m), -f.S1 * pr.pow(m),
                               Rational(1)};

  long fuel = (nuQ + 6 * m) / 2 + 3;
  while (true) {
    if (fuel-- < 0)
      throw Error(ErrorKind::internal, "cluster refinement exceeded its depth bound");

    // An exact zero root is rational; discriminant != 0 allows at most one.
    int lo = 0;
    while (lo < 3 && a[(size_t)lo].is_zero()) ++lo;
    if (lo > 1) throw Error(ErrorKind::internal, "repeated zero root in separable cubic");

    std::vector<HullPoint> pts;
    for (int i = lo; i <= 3; ++i)
      if (!a[(size_t)i].is_zero()) pts.push_back({i, val_p_unchecked(a[(size_t)i], p).value()});
    auto hull = lower_hull(pts);

    struct Edge {
      long i1;
      Rational v1;
      Rational w;  // root valuation
      long len;
    };
    std::vector<Edge> edges;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
      Rational sigma = (hull[k + 1].v - hull[k].v) / Rational(hull[k + 1].i - hull[k].i);
      edges.push_back({hull[k].i, hull[k].v, -sigma, hull[k + 1].i - hull[k].i});
    }
    for (const auto& e : edges) {
      mpz_class den = e.w.denominator();
      if (den == 3) return 3;
      if (den == 2)
        throw Error(ErrorKind::internal, "ramified quadratic slope with even disc valuation");
      if (den != 1 || e.w.sign() < 0)
        throw Error(ErrorKind::internal, "unexpected Newton slope " + e.w.to_string());
    }

    bool translated = false;
    for (const auto& e : edges) {
      if (e.len < 2) continue;
      long w = e.w.numerator().get_si();
      // Residual polynomial of the segment over F_p.
      FpPoly r;
      for (long j = 0; j <= e.len; ++j) {
        const Rational& c = a[(size_t)(e.i1 + j)];
        Rational h = e.v1 - Rational(j * w);  // height of the segment line at i1 + j
        if (c.is_zero() || val_p_unchecked(c, p).value() > h) {
          r.push_back(0);
        } else {
          r.push_back(fp_of_rational(c / pr.pow(h.numerator().get_si()), p));
        }
      }
      fp_trim(r);
      if (fp_deg(r) != e.len)
        throw Error(ErrorKind::internal, "residual polynomial degenerated");

      FpPoly g = fp_gcd(r, fp_derivative(r, p), p);
      if (fp_deg(g) <= 0) continue;  // separable: all clusters are singletons

      mpz_class u;
      if (fp_deg(g) == 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), g[1].get_mpz_t(), p.get_mpz_t());
        u = fp_reduce(-g[0] * inv, p);
      } else {
        // Triple residual root of a cubic segment: u = -r2 / (3 r3).
        if (fp_deg(g) != 2 || fp_deg(r) != 3)
          throw Error(ErrorKind::internal, "unexpected residual multiplicity pattern");
        mpz_class inv;
        mpz_class lead3 = fp_reduce(r[3] * 3, p);
        mpz_invert(inv.get_mpz_t(), lead3.get_mpz_t(), p.get_mpz_t());
        u = fp_reduce(-r[2] * inv, p);
      }
      a = taylor_shift(a, Rational(u) * pr.pow(w));
      translated = true;
      break;
    }
    if (!translated) return 1;  // every cluster separated into unramified roots
  }
}

int splitting_degree_fast(const CianiTuple& t, const mpz_class& p) {
  require_prime(p);
  if (p <= 3) throw Error(ErrorKind::bad_prime, "splitting degree requires p > 3");
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");
  Rational Q = q_invariant(t);
  if (Q.is_zero()) throw Error(ErrorKind::special_curve, "special tuple has no splitting degree");

  NormalizedProfile prof = normalize_at(t, p);
  const auto& v = prof.vals;
  bool profile = prof.integral && v[0] == Valuation(0) && Valuation(0) < v[2] &&
                 v[2] * Rational(3) == v[3] * Rational(2) && v[3] * Rational(2) <= v[1] * Rational(6);
  if (!profile)
    throw Error(ErrorKind::internal, "valuation criterion needs the good hyperelliptic profile");

  long nuQ = (val_p_unchecked(Q, p) - prof.shift * Rational(6)).to_long();
  Valuation nuR = val_p_unchecked(r_invariant(t), p) - prof.shift * Rational(2);
  long r6 = ((nuQ % 6) + 6) % 6;
  if (r6 % 2 == 1) return 2;
  if (r6 == 0) return 1;
  return Valuation(Rational(nuQ)) > nuR * Rational(3) ? 1 : 3;
}

}  // namespace ciani
