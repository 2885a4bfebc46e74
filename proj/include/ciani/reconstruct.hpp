#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ciani/algebra.hpp"
#include "ciani/invariants.hpp"

namespace ciani {

// Ternary quartic with 15 rational coefficients, listed in the fixed order
// x^4, x^3y, x^3z, x^2y^2, x^2yz, x^2z^2, xy^3, xy^2z, xyz^2, xz^3,
// y^4, y^3z, y^2z^2, yz^3, z^4.
struct TernaryQuartic {
  std::array<Rational, 15> c;

  static const std::array<const char*, 15>& monomials();
  static int index_of(int i, int j, int k);  // exponents of x, y, z; i+j+k = 4
  static TernaryQuartic from_diagonal(const StandardModel& m);
  // Defined when only the six diagonal-model slots are nonzero.
  std::optional<StandardModel> as_diagonal() const;

  friend bool operator==(const TernaryQuartic& f, const TernaryQuartic& g) { return f.c == g.c; }
};

enum class ReconsCase { A, B, C };  // P != 0; P = 0, S2 != 0; P = S2 = 0
char recons_case_name(ReconsCase c);

// Standard model with prescribed invariants. Case A carries the three
// resolvent roots in the rank-6 splitting algebra; cases B and C carry a
// rank-2 algebra (conjugate root pair, respectively a formal square root r
// with r^2 = I3 S1). The model's invariants are the input scaled by
// (lambda, lambda, lambda, lambda^2).
struct ReconstructedModel {
  ReconsCase kase;
  CubicPoly cubic;     // resolvent
  Rational P;
  Rational lambda;     // P^2, S2^2, I3^2 by case
  Rational r_squared;  // case C only: r^2 = I3 S1
  std::variant<ModelT<SplittingElement>, ModelT<QuadElement>> model;
};

// Requires a smooth tuple.
ReconstructedModel reconstruct(const CianiTuple& t);

// True when the resolvent of the model's invariants has root multiset
// {A a^2, B b^2, C c^2}, tested through elementary symmetric functions.
bool roots_check(const StandardModel& m);

struct VerificationReport {
  bool pass = true;
  ReconsCase kase = ReconsCase::A;
  Rational lambda;
  std::vector<std::string> failures;
};

// Evaluates the invariants of the reconstructed model inside its root
// algebra and checks them against the lambda-scaled input, then checks the
// discriminant relation Delta(model) = Delta(t) * {P, S2, I3}^18.
VerificationReport verify_reconstruction(const CianiTuple& t);

// Model over the field of the invariants, by pulling the standard model
// back through the column of explicit isomorphisms selected by the
// factorisation pattern of the resolvent over the rationals: split ->
// identity, one rational root + irreducible quadratic -> unipotent column
// mixing the conjugate pair, irreducible -> Vandermonde. The double-root
// case (P = S2 = 0) rescales x by the formal root r and is rational since
// only r^2 enters. All coefficients are checked rational exactly.
struct KModel {
  TernaryQuartic quartic;
  int column;       // 1, 2 or 3: number of variables mixed by the column
  Rational lambda;  // measured det(phi)^4
};
KModel k_model(const CianiTuple& t);

// Twist descriptors at p. Matrix entries are formal symbols; pi and pi1
// denote uniformiser roots with v(pi) = 1/2 and v(pi1) = 1/4, B and C the
// conjugate resolvent roots, zeta4 a primitive fourth root of unity.
// Equations are attached whenever the twisted form has rational
// coefficients computable exactly (always for the trivial twist; for the
// diagonal twists exactly when the resolvent splits over the rationals).
struct TwistDescriptor {
  enum class Entry { zero, one, pi, pi1, zeta4, rootB, rootC, zeta4_rootC };
  int index = 0;
  std::array<std::array<Entry, 3>, 3> matrix;
  std::optional<TernaryQuartic> equation;
};
const char* twist_entry_name(TwistDescriptor::Entry e);

// Count follows the local splitting degree: 4, 2, 1 descriptors for
// degree 1, 2, 3. Requires a smooth non-special tuple and p > 3.
std::vector<TwistDescriptor> twists(const CianiTuple& t, const mpz_class& p);

}  // namespace ciani
