#include "ciani/report_json.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "ciani/algebra.hpp"
#include "ciani/conductor.hpp"
#include "ciani/padic.hpp"
#include "ciani/reconstruct.hpp"
#include "ciani/reduction.hpp"

namespace ciani {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

json tuple_json(const CianiTuple& t) {
  return json::array({t.I3.to_string(), t.I3p.to_string(), t.I3pp.to_string(), t.I6.to_string()});
}

json model_json(const StandardModel& m) {
  return json::array({m.A.to_string(), m.B.to_string(), m.C.to_string(), m.a.to_string(),
                      m.b.to_string(), m.c.to_string()});
}

json resolvent_json(const CubicPoly& f) {
  json r;
  r["S1"] = f.S1.to_string();
  r["S2"] = f.S2.to_string();
  r["S3"] = f.S3.to_string();
  return r;
}

json quartic_json(const TernaryQuartic& q) {
  json arr = json::array();
  for (const auto& c : q.c) arr.push_back(c.to_string());
  return arr;
}

const char* reduction_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::good_quartic: return "good_quartic";
    case ReductionKind::good_hyperelliptic: return "good_hyperelliptic";
    default: return "bad";
  }
}

const char* bad_reason_name(BadReason r) {
  return r == BadReason::non_integral_normalisation ? "non_integral_normalisation"
                                                    : "profile_mismatch";
}

json scan_row(const CianiTuple& t, const mpz_class& p) {
  ConductorReport rep = conductor(t, p);
  NormalizedProfile prof = normalize_at(t, p);
  Valuation nu_delta =
      val_p_unchecked(discriminant(t), p) - prof.shift * Rational(9);

  json row;
  row["prime"] = p.get_str();
  row["reduction"] = reduction_name(rep.reduction.kind);
  if (rep.reduction.kind == ReductionKind::good_hyperelliptic) row["e"] = rep.reduction.e;
  if (rep.reduction.kind == ReductionKind::bad)
    row["reason"] = bad_reason_name(rep.reduction.reason);
  row["splitting_degree"] = rep.splitting_degree;
  if (rep.conductor_min) {
    row["conductor_min"] = *rep.conductor_min;
  } else {
    row["conductor_min"] = nullptr;
    row["positive"] = true;
  }
  row["nuQ"] = rep.nuQ.to_string();
  row["nuDelta"] = nu_delta.to_string();
  return row;
}

void gate_scan(const CianiTuple& t) {
  if (discriminant(t).is_zero()) throw Error(ErrorKind::singular, "singular invariant tuple");
  if (q_invariant(t).is_zero())
    throw Error(ErrorKind::special_curve,
                "special Ciani curve: conductor not covered by this method");
}

}  // namespace

StandardModel parse_model_csv(const std::string& s) {
  auto parts = split_csv(s);
  if (parts.size() != 6)
    throw Error(ErrorKind::parse, "expected 6 comma-separated rationals A,B,C,a,b,c");
  return {Rational::from_string(parts[0]), Rational::from_string(parts[1]),
          Rational::from_string(parts[2]), Rational::from_string(parts[3]),
          Rational::from_string(parts[4]), Rational::from_string(parts[5])};
}

CianiTuple parse_tuple_csv(const std::string& s) {
  auto parts = split_csv(s);
  if (parts.size() != 4)
    throw Error(ErrorKind::parse, "expected 4 comma-separated rationals I3,I3',I3'',I6");
  return {Rational::from_string(parts[0]), Rational::from_string(parts[1]),
          Rational::from_string(parts[2]), Rational::from_string(parts[3])};
}

mpz_class parse_prime(const std::string& s) {
  Rational r = Rational::from_string(s);
  if (!r.is_integer() || r.sign() <= 0) throw Error(ErrorKind::bad_prime, "not a prime: " + s);
  mpz_class p = r.numerator();
  require_prime(p);
  return p;
}

std::string invariants_report(const StandardModel& m) {
  CianiTuple t = invariants_of(m);
  Rational delta = discriminant(t);
  json doc;
  doc["schema"] = "1";
  doc["model"] = model_json(m);
  doc["invariants"] = tuple_json(t);
  doc["discriminant"] = delta.to_string();
  doc["smooth"] = !delta.is_zero();
  doc["P"] = p_invariant(t).to_string();
  doc["I"] = i_invariant(m).to_string();
  doc["Q"] = q_invariant(t).to_string();
  doc["R"] = r_invariant(t).to_string();
  doc["resolvent"] = resolvent_json(resolvent(t));
  auto pd = pair_discriminants(m);
  doc["pair_discriminants"] =
      json::array({pd[0].to_string(), pd[1].to_string(), pd[2].to_string()});
  if (delta.is_zero())
    doc["special"] = nullptr;
  else
    doc["special"] = is_special(t);
  return doc.dump(2);
}

std::string reconstruct_report(const CianiTuple& t) {
  ReconstructedModel rm = reconstruct(t);
  VerificationReport ver = verify_reconstruction(t);
  KModel km = k_model(t);

  json doc;
  doc["schema"] = "1";
  doc["invariants"] = tuple_json(t);
  doc["case"] = std::string(1, recons_case_name(rm.kase));
  doc["P"] = rm.P.to_string();
  doc["resolvent"] = resolvent_json(rm.cubic);
  doc["lambda"] = rm.lambda.to_string();

  // Symbolic description of the standard model; root1..root3 denote the
  // resolvent roots (cases A, B), r the formal root with r^2 as listed.
  json coeffs;
  switch (rm.kase) {
    case ReconsCase::A:
      coeffs = json::array({"root1", "root2", "root3", rm.P.to_string(), rm.P.to_string(),
                            rm.P.to_string()});
      break;
    case ReconsCase::B:
      coeffs = json::array({(t.I3 * rm.cubic.S2).to_string(), "root2", "root3", "0",
                            rm.cubic.S2.to_string(), rm.cubic.S2.to_string()});
      break;
    case ReconsCase::C:
      coeffs = json::array(
          {t.I3.to_string(), t.I3.to_string(), t.I3.to_string(), "0", "0", "r"});
      break;
  }
  doc["standard_model"] = coeffs;
  if (rm.kase == ReconsCase::C) doc["r_squared"] = rm.r_squared.to_string();

  json kj;
  kj["column"] = km.column;
  kj["lambda"] = km.lambda.to_string();
  kj["monomials"] = TernaryQuartic::monomials();
  kj["coefficients"] = quartic_json(km.quartic);
  doc["k_model"] = kj;

  json vj;
  vj["pass"] = ver.pass;
  vj["lambda"] = ver.lambda.to_string();
  vj["failures"] = ver.failures;
  doc["verification"] = vj;
  return doc.dump(2);
}

std::string classify_report(const CianiTuple& t, const mpz_class& p) {
  ReductionType red = classify(t, p);
  NormalizedProfile prof = normalize_at(t, p);
  json doc;
  doc["schema"] = "1";
  doc["prime"] = p.get_str();
  doc["type"] = reduction_name(red.kind);
  if (red.kind == ReductionKind::good_hyperelliptic) doc["e"] = red.e;
  if (red.kind == ReductionKind::bad) doc["reason"] = bad_reason_name(red.reason);
  doc["normalized_valuations"] =
      json::array({prof.vals[0].to_string(), prof.vals[1].to_string(), prof.vals[2].to_string(),
                   prof.vals[3].to_string()});
  doc["normalisation_integral"] = prof.integral;
  return doc.dump(2);
}

std::string conductor_report(const CianiTuple& t, const mpz_class& p) {
  ConductorReport rep = conductor(t, p);
  json doc;
  doc["schema"] = "1";
  doc["prime"] = p.get_str();
  doc["reduction"] = reduction_name(rep.reduction.kind);
  if (rep.reduction.kind == ReductionKind::good_hyperelliptic) doc["e"] = rep.reduction.e;
  if (rep.reduction.kind == ReductionKind::bad)
    doc["reason"] = bad_reason_name(rep.reduction.reason);
  doc["special"] = rep.special;
  doc["splitting_degree"] = rep.splitting_degree;
  doc["nuQ"] = rep.nuQ.to_string();
  doc["nuR"] = rep.nuR.to_string();
  if (rep.conductor_min) {
    doc["conductor_min"] = *rep.conductor_min;
  } else {
    doc["conductor_min"] = nullptr;
    doc["positive"] = true;
  }
  json tw = json::array();
  for (const auto& [idx, f] : rep.per_twist) tw.push_back(json::array({idx, f}));
  doc["per_twist"] = tw;
  if (rep.good_model) {
    json gm;
    gm["case"] = std::string(1, recons_case_name(rep.good_model->base_case));
    gm["rescaling"] = rep.good_model->rescaling;
    gm["rescale_exponents"] = json::array({rep.good_model->rescale_exponents[0].to_string(),
                                           rep.good_model->rescale_exponents[1].to_string(),
                                           rep.good_model->rescale_exponents[2].to_string()});
    gm["delta_valuation"] = rep.good_model->delta_valuation.to_string();
    gm["field_extension"] = rep.good_model->field_extension;
    doc["good_model"] = gm;
  }
  doc["stable_field_degree_divisor"] = rep.stable_field_degree_divisor;
  if (rep.good_field_degree) doc["good_field_degree"] = *rep.good_field_degree;

  json tws = json::array();
  for (const auto& d : twists(t, p)) {
    json dj;
    dj["index"] = d.index;
    json mat = json::array();
    for (const auto& row : d.matrix) {
      mat.push_back(json::array(
          {twist_entry_name(row[0]), twist_entry_name(row[1]), twist_entry_name(row[2])}));
    }
    dj["matrix"] = mat;
    if (d.equation)
      dj["equation"] = quartic_json(*d.equation);
    else
      dj["equation"] = nullptr;
    tws.push_back(dj);
  }
  doc["twists"] = tws;
  return doc.dump(2);
}

namespace {

std::string scan_report(const CianiTuple& t, const std::vector<mpz_class>& primes,
                        const std::vector<mpz_class>& cofactors, bool bound_mode,
                        unsigned long bound) {
  std::set<mpz_class> uniq(primes.begin(), primes.end());
  json rows = json::array();
  json unsupported = json::array();
  for (const auto& p : uniq) {
    if (p <= 3)
      unsupported.push_back(p.get_str());
    else
      rows.push_back(scan_row(t, p));
  }
  json doc;
  doc["schema"] = "1";
  doc["invariants"] = tuple_json(t);
  doc["mode"] = bound_mode ? "bound" : "primes";
  if (bound_mode) doc["bound"] = bound;
  doc["rows"] = rows;
  doc["unsupported_primes"] = unsupported;
  if (bound_mode) {
    json cof = json::array();
    for (const auto& c : cofactors) cof.push_back(c.get_str());
    doc["unscanned_cofactors"] = cof;
    doc["note"] =
        "every prime p > 3 outside rows and cofactors has good quartic reduction with "
        "conductor exponent 0 for all models";
  }
  return doc.dump(2);
}

}  // namespace

std::string scan_report_primes(const CianiTuple& t, const std::vector<mpz_class>& primes) {
  gate_scan(t);
  return scan_report(t, primes, {}, false, 0);
}

std::string scan_report_bound(const CianiTuple& t, unsigned long bound) {
  gate_scan(t);
  // Candidate primes: divisors of num(Q), num(Delta), num(R), and of every
  // numerator and denominator of the invariants. Any p > 3 outside this
  // set has unit invariants, v(Delta) = v(Q) = 0, hence conductor 0.
  std::vector<mpz_class> sources;
  auto add = [&](const Rational& x) {
    if (x.is_zero()) return;
    if (::abs(x.numerator()) != 1) sources.push_back(::abs(x.numerator()));
    if (x.denominator() != 1) sources.push_back(x.denominator());
  };
  add(q_invariant(t));
  add(discriminant(t));
  add(r_invariant(t));
  add(t.I3);
  add(t.I3p);
  add(t.I3pp);
  add(t.I6);

  std::vector<mpz_class> primes, cofactors;
  for (const auto& n : sources) {
    Factorization f = trial_factor(n, bound);
    for (const auto& [p, e] : f.factors) primes.push_back(p);
    if (f.cofactor != 1 &&
        std::find(cofactors.begin(), cofactors.end(), f.cofactor) == cofactors.end())
      cofactors.push_back(f.cofactor);
  }
  std::sort(cofactors.begin(), cofactors.end());
  return scan_report(t, primes, cofactors, true, bound);
}

}  // namespace ciani
