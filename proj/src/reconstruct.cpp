#include "ciani/reconstruct.hpp"

#include <algorithm>
#include <map>

#include "ciani/padic.hpp"

namespace ciani {

namespace {

const std::array<std::array<int, 3>, 15>& quartic_exponents() {
  static const std::array<std::array<int, 3>, 15> e = {{{4, 0, 0},
                                                        {3, 1, 0},
                                                        {3, 0, 1},
                                                        {2, 2, 0},
                                                        {2, 1, 1},
                                                        {2, 0, 2},
                                                        {1, 3, 0},
                                                        {1, 2, 1},
                                                        {1, 1, 2},
                                                        {1, 0, 3},
                                                        {0, 4, 0},
                                                        {0, 3, 1},
                                                        {0, 2, 2},
                                                        {0, 1, 3},
                                                        {0, 0, 4}}};
  return e;
}

}  // namespace

const std::array<const char*, 15>& TernaryQuartic::monomials() {
  static const std::array<const char*, 15> names = {
      "x^4", "x^3*y", "x^3*z", "x^2*y^2", "x^2*y*z", "x^2*z^2", "x*y^3", "x*y^2*z",
      "x*y*z^2", "x*z^3", "y^4", "y^3*z", "y^2*z^2", "y*z^3", "z^4"};
  return names;
}

int TernaryQuartic::index_of(int i, int j, int k) {
  const auto& e = quartic_exponents();
  for (int n = 0; n < 15; ++n)
    if (e[(size_t)n] == std::array<int, 3>{i, j, k}) return n;
  throw Error(ErrorKind::internal, "not a quartic monomial");
}

TernaryQuartic TernaryQuartic::from_diagonal(const StandardModel& m) {
  TernaryQuartic q{};
  q.c[0] = m.A;
  q.c[10] = m.B;
  q.c[14] = m.C;
  q.c[12] = m.a;
  q.c[5] = m.b;
  q.c[3] = m.c;
  return q;
}

std::optional<StandardModel> TernaryQuartic::as_diagonal() const {
  static const int diag[6] = {0, 10, 14, 12, 5, 3};
  for (int n = 0; n < 15; ++n) {
    bool is_diag = std::find(std::begin(diag), std::end(diag), n) != std::end(diag);
    if (!is_diag && !c[(size_t)n].is_zero()) return std::nullopt;
  }
  return StandardModel{c[0], c[10], c[14], c[12], c[5], c[3]};
}

char recons_case_name(ReconsCase c) {
  switch (c) {
    case ReconsCase::A: return 'A';
    case ReconsCase::B: return 'B';
    default: return 'C';
  }
}

namespace {

// --- generic expansion over a root algebra ---

inline bool elem_is_zero(const Rational& x) { return x.is_zero(); }
inline bool elem_is_zero(const QuadElement& x) { return x.coord0().is_zero() && x.coord1().is_zero(); }
inline bool elem_is_zero(const SplittingElement& x) {
  for (const auto& v : x.coords())
    if (!v.is_zero()) return false;
  return true;
}
inline bool elem_is_rational(const Rational&) { return true; }
inline bool elem_is_rational(const QuadElement& x) { return x.is_rational(); }
inline bool elem_is_rational(const SplittingElement& x) { return x.is_rational(); }
inline Rational elem_value(const Rational& x) { return x; }
inline Rational elem_value(const QuadElement& x) { return x.rational_value(); }
inline Rational elem_value(const SplittingElement& x) { return x.rational_value(); }

template <class R>
using TriPoly = std::map<std::array<int, 3>, R>;

template <class R>
void tri_add(TriPoly<R>& P, const std::array<int, 3>& e, const R& c) {
  if (elem_is_zero(c)) return;
  auto it = P.find(e);
  if (it == P.end()) {
    P.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (elem_is_zero(it->second)) P.erase(it);
  }
}

template <class R>
TriPoly<R> tri_mul(const TriPoly<R>& A, const TriPoly<R>& B) {
  TriPoly<R> out;
  for (const auto& [ea, ca] : A)
    for (const auto& [eb, cb] : B)
      tri_add(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

template <class R>
TriPoly<R> tri_linear(const std::array<R, 3>& row) {
  TriPoly<R> out;
  tri_add(out, {1, 0, 0}, row[0]);
  tri_add(out, {0, 1, 0}, row[1]);
  tri_add(out, {0, 0, 1}, row[2]);
  return out;
}

// Diagonal form with coefficients from m, pulled back through the
// substitution (x, y, z) -> rows * (x, y, z). Every coefficient of the
// result must be rational in the root algebra.
template <class R>
TernaryQuartic expand_pullback(const ModelT<R>& m, const std::array<std::array<R, 3>, 3>& rows) {
  auto X2 = tri_mul(tri_linear(rows[0]), tri_linear(rows[0]));
  auto Y2 = tri_mul(tri_linear(rows[1]), tri_linear(rows[1]));
  auto Z2 = tri_mul(tri_linear(rows[2]), tri_linear(rows[2]));
  TriPoly<R> F;
  auto acc = [&](const R& coef, const TriPoly<R>& Pa, const TriPoly<R>& Pb) {
    if (elem_is_zero(coef)) return;
    for (const auto& [e, c] : tri_mul(Pa, Pb)) tri_add(F, e, coef * c);
  };
  acc(m.A, X2, X2);
  acc(m.B, Y2, Y2);
  acc(m.C, Z2, Z2);
  acc(m.a, Y2, Z2);
  acc(m.b, X2, Z2);
  acc(m.c, X2, Y2);

  TernaryQuartic q{};
  for (const auto& [e, c] : F) {
    if (e[0] + e[1] + e[2] != 4) throw Error(ErrorKind::internal, "expansion degree mismatch");
    if (!elem_is_rational(c))
      throw Error(ErrorKind::internal, "pulled-back coefficient is not rational");
    q.c[(size_t)TernaryQuartic::index_of(e[0], e[1], e[2])] = elem_value(c);
  }
  return q;
}

template <class R>
R det3(const std::array<std::array<R, 3>, 3>& M) {
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

CianiTuple scaled_tuple(const CianiTuple& t, const Rational& lambda) {
  return {lambda * t.I3, lambda * t.I3p, lambda * t.I3pp, lambda * lambda * t.I6};
}

}  // namespace

ReconstructedModel reconstruct(const CianiTuple& t) {
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");
  CubicPoly f = resolvent(t);
  Rational P = p_invariant(t);

  if (!P.is_zero()) {
    SplittingElement x = SplittingElement::root_x(f), y = SplittingElement::root_y(f),
                     z = SplittingElement::root_z(f);
    SplittingElement pc(f, P);
    return ReconstructedModel{ReconsCase::A, f, P, P * P, Rational(0),
                              ModelT<SplittingElement>{x, y, z, pc, pc, pc}};
  }
  if (!f.S2.is_zero()) {
    // P = 0 forces S3 = 0: the resolvent is T (T^2 - S1 T + S2) with a
    // simple zero root; the nonzero pair lives in the quadratic algebra.
    QuadElement u = QuadElement::root_u(f.S1, f.S2), w = QuadElement::root_conj(f.S1, f.S2);
    auto cst = [&](const Rational& v) { return QuadElement::constant(f.S1, f.S2, v); };
    return ReconstructedModel{
        ReconsCase::B, f, P, f.S2 * f.S2, Rational(0),
        ModelT<QuadElement>{cst(t.I3 * f.S2), u, w, cst(Rational(0)), cst(f.S2), cst(f.S2)}};
  }
  // P = S2 = 0: zero is a multiple root; carry r with r^2 = I3 S1.
  Rational r2 = t.I3 * f.S1;
  QuadElement r = QuadElement::root_u(Rational(0), -r2);
  auto cst = [&](const Rational& v) { return QuadElement::constant(Rational(0), -r2, v); };
  return ReconstructedModel{
      ReconsCase::C, f, P, t.I3 * t.I3, r2,
      ModelT<QuadElement>{cst(t.I3), cst(t.I3), cst(t.I3), cst(Rational(0)), cst(Rational(0)), r}};
}

bool roots_check(const StandardModel& m) {
  CubicPoly f = resolvent(invariants_of(m));
  Rational ra = m.A * m.a * m.a, rb = m.B * m.b * m.b, rc = m.C * m.c * m.c;
  return f.S1 == ra + rb + rc && f.S2 == ra * rb + rb * rc + rc * ra && f.S3 == ra * rb * rc;
}

VerificationReport verify_reconstruction(const CianiTuple& t) {
  ReconstructedModel rm = reconstruct(t);
  VerificationReport rep;
  rep.kase = rm.kase;
  rep.lambda = rm.lambda;

  Rational base;
  switch (rm.kase) {
    case ReconsCase::A: base = rm.P; break;
    case ReconsCase::B: base = rm.cubic.S2; break;
    case ReconsCase::C: base = t.I3; break;
  }

  std::array<Rational, 4> got{};
  bool all_rational = true;
  static const char* names[4] = {"I3", "I3'", "I3''", "I6"};
  std::visit(
      [&](const auto& model) {
        auto inv = invariants_of(model);
        auto take = [&](const auto& e, int k) {
          if (!elem_is_rational(e)) {
            all_rational = false;
            rep.pass = false;
            rep.failures.push_back(std::string(names[k]) + " is not rational in the root algebra");
            return;
          }
          got[(size_t)k] = elem_value(e);
        };
        take(inv.I3, 0);
        take(inv.I3p, 1);
        take(inv.I3pp, 2);
        take(inv.I6, 3);
      },
      rm.model);
  if (!all_rational) return rep;

  CianiTuple want = scaled_tuple(t, rm.lambda);
  const Rational* wv[4] = {&want.I3, &want.I3p, &want.I3pp, &want.I6};
  for (int k = 0; k < 4; ++k) {
    if (got[(size_t)k] != *wv[k]) {
      rep.pass = false;
      rep.failures.push_back(std::string(names[k]) + " = " + got[(size_t)k].to_string() +
                             ", expected " + wv[k]->to_string());
    }
  }
  Rational dmodel = Rational(1048576) * got[0] * got[2].pow(4) * got[3].pow(2);
  Rational dwant = discriminant(t) * base.pow(18);
  if (dmodel != dwant) {
    rep.pass = false;
    rep.failures.push_back("discriminant relation: " + dmodel.to_string() + " vs " +
                           dwant.to_string());
  }
  return rep;
}

KModel k_model(const CianiTuple& t) {
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");
  CubicPoly f = resolvent(t);
  Rational P = p_invariant(t);
  KModel out;

  auto check_diagonal = [&](const StandardModel& m, const Rational& lambda_total) {
    if (!(invariants_of(m) == scaled_tuple(t, lambda_total)))
      throw Error(ErrorKind::internal, "descended model invariants mismatch");
  };
  auto check_projective = [&](const Rational& lambda_total) {
    if (lambda_total.is_zero() || !projectively_equal(t, scaled_tuple(t, lambda_total)))
      throw Error(ErrorKind::internal, "descended model not projectively equal");
  };

  if (P.is_zero() && f.S2.is_zero()) {
    // Double zero root: rescale x by the formal root r; only r^2 = I3 S1
    // enters, so the result is rational.
    Rational r2 = t.I3 * f.S1;
    StandardModel m;
    if (r2.is_zero()) {
      m = {t.I3, t.I3, t.I3, Rational(0), Rational(0), Rational(0)};
      out.lambda = Rational(1);
    } else {
      m = {t.I3 * r2, t.I3, t.I3, Rational(0), Rational(0), r2};
      out.lambda = r2;
    }
    out.column = 1;
    out.quartic = TernaryQuartic::from_diagonal(m);
    check_diagonal(m, out.lambda * t.I3 * t.I3);
    return out;
  }

  bool caseA = !P.is_zero();
  Rational lambda_case = caseA ? P * P : f.S2 * f.S2;
  CubicFactorisation fac = factor_cubic(f);

  if (fac.split()) {
    StandardModel m;
    if (caseA) {
      m = {fac.roots[0], fac.roots[1], fac.roots[2], P, P, P};
    } else {
      std::vector<Rational> nz;
      for (const auto& r : fac.roots)
        if (!r.is_zero()) nz.push_back(r);
      if (nz.size() != 2) throw Error(ErrorKind::internal, "zero root multiplicity mismatch");
      m = {t.I3 * f.S2, nz[0], nz[1], Rational(0), f.S2, f.S2};
    }
    out.column = 1;
    out.lambda = Rational(1);
    out.quartic = TernaryQuartic::from_diagonal(m);
    check_diagonal(m, lambda_case);
    return out;
  }

  if (!fac.irreducible()) {
    // One rational root, conjugate pair in the quadratic algebra.
    const Rational &s = fac.pair_sum, &q = fac.pair_product;
    auto cst = [&](const Rational& v) { return QuadElement::constant(s, q, v); };
    QuadElement u = QuadElement::root_u(s, q), w = QuadElement::root_conj(s, q);
    ModelT<QuadElement> m = caseA ? ModelT<QuadElement>{cst(fac.roots[0]), u, w, cst(P), cst(P), cst(P)}
                                  : ModelT<QuadElement>{cst(t.I3 * f.S2), u, w, cst(Rational(0)),
                                                        cst(f.S2), cst(f.S2)};
    if (!caseA && !fac.roots[0].is_zero())
      throw Error(ErrorKind::internal, "expected the zero root to be the rational one");
    std::array<std::array<QuadElement, 3>, 3> rows = {{
        {cst(Rational(1)), cst(Rational(0)), cst(Rational(0))},
        {cst(Rational(0)), cst(Rational(1)), u},
        {cst(Rational(0)), cst(Rational(1)), w},
    }};
    out.column = 2;
    out.quartic = expand_pullback(m, rows);
    QuadElement det = det3(rows);
    QuadElement det4 = det * det * det * det;
    if (!det4.is_rational()) throw Error(ErrorKind::internal, "det^4 is not rational");
    out.lambda = det4.rational_value();
    check_projective(out.lambda * lambda_case);
    return out;
  }

  // Irreducible resolvent: Vandermonde column in the splitting algebra.
  if (!caseA) throw Error(ErrorKind::internal, "resolvent with P = 0 always has the root 0");
  SplittingElement x = SplittingElement::root_x(f), y = SplittingElement::root_y(f),
                   z = SplittingElement::root_z(f);
  auto cst = [&](const Rational& v) { return SplittingElement(f, v); };
  ModelT<SplittingElement> m{x, y, z, cst(P), cst(P), cst(P)};
  std::array<std::array<SplittingElement, 3>, 3> rows = {{
      {cst(Rational(1)), x, x * x},
      {cst(Rational(1)), y, y * y},
      {cst(Rational(1)), z, z * z},
  }};
  out.column = 3;
  out.quartic = expand_pullback(m, rows);
  SplittingElement det = det3(rows);
  SplittingElement det4 = det * det * det * det;
  if (!det4.is_rational()) throw Error(ErrorKind::internal, "det^4 is not rational");
  out.lambda = det4.rational_value();
  check_projective(out.lambda * lambda_case);
  return out;
}

namespace {

using Entry = TwistDescriptor::Entry;
using Matrix = std::array<std::array<Entry, 3>, 3>;

Matrix identity_matrix() {
  Matrix M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M[(size_t)i][(size_t)j] = (i == j) ? Entry::one : Entry::zero;
  return M;
}

}  // namespace

const char* twist_entry_name(TwistDescriptor::Entry e) {
  switch (e) {
    case Entry::zero: return "0";
    case Entry::one: return "1";
    case Entry::pi: return "pi";
    case Entry::pi1: return "pi1";
    case Entry::zeta4: return "zeta4";
    case Entry::rootB: return "B";
    case Entry::rootC: return "C";
    default: return "zeta4*C";
  }
}

std::vector<TwistDescriptor> twists(const CianiTuple& t, const mpz_class& p) {
  require_prime(p);
  if (p <= 3) throw Error(ErrorKind::bad_prime, "twist enumeration requires p > 3");
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");
  if (q_invariant(t).is_zero())
    throw Error(ErrorKind::special_curve, "special Ciani curve: twists not enumerated");

  int deg = splitting_degree_nr(resolvent(t), p);
  NormalizedProfile prof = normalize_at(t, p);
  CianiTuple tn = prof.integral ? *prof.tuple : t;
  KModel km = k_model(tn);

  std::vector<TwistDescriptor> out;
  if (deg == 1) {
    TwistDescriptor d0;
    d0.index = 0;
    d0.matrix = identity_matrix();
    d0.equation = km.quartic;
    out.push_back(std::move(d0));

    std::optional<StandardModel> diag =
        km.column == 1 ? km.quartic.as_diagonal() : std::nullopt;
    Rational pr{mpz_class(p)}, p2 = pr * pr;
    for (int k = 1; k <= 3; ++k) {
      TwistDescriptor d;
      d.index = k;
      d.matrix = identity_matrix();
      d.matrix[(size_t)(k - 1)][(size_t)(k - 1)] = Entry::pi;
      if (diag) {
        const StandardModel& m = *diag;
        StandardModel tw;
        if (k == 1)
          tw = {m.A * p2, m.B, m.C, m.a, m.b * pr, m.c * pr};
        else if (k == 2)
          tw = {m.A, m.B * p2, m.C, m.a * pr, m.b, m.c * pr};
        else
          tw = {m.A, m.B, m.C * p2, m.a * pr, m.b * pr, m.c};
        d.equation = TernaryQuartic::from_diagonal(tw);
      }
      out.push_back(std::move(d));
    }
  } else if (deg == 2) {
    TwistDescriptor d0;
    d0.index = 0;
    d0.matrix = {{{Entry::one, Entry::zero, Entry::zero},
                  {Entry::zero, Entry::one, Entry::rootB},
                  {Entry::zero, Entry::one, Entry::rootC}}};
    if (km.column == 2) d0.equation = km.quartic;
    TwistDescriptor d1;
    d1.index = 1;
    d1.matrix = {{{Entry::pi1, Entry::zero, Entry::zero},
                  {Entry::zero, Entry::one, Entry::rootB},
                  {Entry::zero, Entry::zeta4, Entry::zeta4_rootC}}};
    out.push_back(std::move(d0));
    out.push_back(std::move(d1));
  } else {
    TwistDescriptor d0;
    d0.index = 0;
    d0.matrix = identity_matrix();
    d0.equation = km.quartic;
    out.push_back(std::move(d0));
  }
  return out;
}

}  // namespace ciani
