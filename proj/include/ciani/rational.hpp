#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ciani {

// Error kinds mirror the CLI exit codes (see tools/ and capi/).
enum class ErrorKind {
  internal = 1,
  parse = 2,
  singular = 3,
  bad_prime = 4,
  special_curve = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Arbitrary-precision rational number. Always canonical: positive
// denominator, gcd(num, den) = 1. Immutable value type, safe to share
// across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "num", "num/den", base 10, with ASCII '-' or U+2212 minus.
  static Rational from_string(std::string_view s);
  std::string to_string() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // q^e, negative e allowed for nonzero q.
  Rational pow(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

 private:
  mpq_class v_;
};

// Value of a valuation: an exact rational, or +infinity (valuation of 0).
class Valuation {
 public:
  Valuation() : inf_(true) {}
  explicit Valuation(Rational v) : inf_(false), v_(std::move(v)) {}
  Valuation(long v) : inf_(false), v_(v) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  // Finite value; throws on +infinity.
  const Rational& value() const;
  bool is_integer() const { return !inf_ && v_.is_integer(); }
  // Finite integer value as long; throws otherwise.
  long to_long() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Valuation(a.v_ + b.v_);
  }
  friend Valuation operator-(const Valuation& a, const Rational& r) {
    if (a.inf_) return infinity();
    return Valuation(a.v_ - r);
  }
  friend Valuation operator*(const Valuation& a, const Rational& r) {
    if (a.inf_) return infinity();
    return Valuation(a.v_ * r);
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

  static Valuation min(const Valuation& a, const Valuation& b) { return a <= b ? a : b; }

  std::string to_string() const { return inf_ ? "inf" : v_.to_string(); }

 private:
  bool inf_;
  Rational v_;
};

// Throws Error(bad_prime) unless p is a prime >= 2.
void require_prime(const mpz_class& p);

// Exponent of p in q, with val_p(0) = +infinity. p must be prime.
Valuation val_p(const Rational& q, const mpz_class& p);

// As val_p but without the primality check; for internal hot paths where
// the prime was already validated.
Valuation val_p_unchecked(const Rational& q, const mpz_class& p);

// Exponent of p in a nonzero integer.
long val_p_int(const mpz_class& n, const mpz_class& p);

struct Factorization {
  std::vector<std::pair<mpz_class, unsigned long>> factors;  // (prime, exponent), primes increasing
  mpz_class cofactor;  // positive, no prime factor <= bound
};

// Trial division of |n| by all primes <= bound. n must be nonzero.
Factorization trial_factor(const mpz_class& n, unsigned long bound);

}  // namespace ciani
