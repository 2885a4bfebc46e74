#include "ciani/rational.hpp"

namespace ciani {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::parse, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  // Normalise U+2212 (minus sign) to '-'.
  std::string buf;
  buf.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    if (i + 3 <= s.size() && (unsigned char)s[i] == 0xE2 && (unsigned char)s[i + 1] == 0x88 &&
        (unsigned char)s[i + 2] == 0x92) {
      buf.push_back('-');
      i += 3;
    } else if (s[i] == ' ' || s[i] == '\t') {
      ++i;
    } else {
      buf.push_back(s[i]);
      ++i;
    }
  }
  if (buf.empty()) throw Error(ErrorKind::parse, "empty rational");
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  size_t slash = buf.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid(buf)) throw Error(ErrorKind::parse, "invalid rational: '" + buf + "'");
      return Rational(mpz_class(buf));
    }
    std::string num = buf.substr(0, slash), den = buf.substr(slash + 1);
    if (!valid(num) || !valid(den)) throw Error(ErrorKind::parse, "invalid rational: '" + buf + "'");
    return Rational(mpz_class(num), mpz_class(den));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse, "invalid rational: '" + buf + "'");
  }
}

std::string Rational::to_string() const {
  return v_.get_str();  // "num" or "num/den"
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::internal, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw Error(ErrorKind::internal, "0 to a negative power");
    return Rational(0);
  }
  mpz_class num = numerator(), den = denominator();
  bool invert = e < 0;
  unsigned long k = invert ? (unsigned long)(-e) : (unsigned long)e;
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
  return invert ? Rational(pd, pn) : Rational(pn, pd);
}

const Rational& Valuation::value() const {
  if (inf_) throw Error(ErrorKind::internal, "valuation is +infinity");
  return v_;
}

long Valuation::to_long() const {
  if (!is_integer()) throw Error(ErrorKind::internal, "valuation " + to_string() + " is not an integer");
  if (!v_.numerator().fits_slong_p())
    throw Error(ErrorKind::internal, "valuation out of range");
  return v_.numerator().get_si();
}

void require_prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw Error(ErrorKind::bad_prime, "not a prime: " + p.get_str());
}

long val_p_int(const mpz_class& n, const mpz_class& p) {
  mpz_class rem;
  return (long)mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Valuation val_p_unchecked(const Rational& q, const mpz_class& p) {
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(val_p_int(q.numerator(), p) - val_p_int(q.denominator(), p));
}

Valuation val_p(const Rational& q, const mpz_class& p) {
  require_prime(p);
  return val_p_unchecked(q, p);
}

Factorization trial_factor(const mpz_class& n, unsigned long bound) {
  if (sgn(n) == 0) throw Error(ErrorKind::internal, "trial_factor of 0");
  Factorization out;
  out.cofactor = ::abs(n);
  mpz_class p = 2;
  while (p <= bound && out.cofactor > 1) {
    if (mpz_divisible_p(out.cofactor.get_mpz_t(), p.get_mpz_t())) {
      unsigned long e =
          (unsigned long)mpz_remove(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), p.get_mpz_t());
      out.factors.emplace_back(p, e);
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return out;
}

}  // namespace ciani
