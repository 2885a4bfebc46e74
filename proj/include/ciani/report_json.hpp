#pragma once

#include <string>
#include <vector>

#include "ciani/invariants.hpp"
#include "ciani/rational.hpp"

namespace ciani {

// CSV payload parsers for the CLI and C API ("num/den" entries).
StandardModel parse_model_csv(const std::string& s);
CianiTuple parse_tuple_csv(const std::string& s);
mpz_class parse_prime(const std::string& s);

// JSON reports; deterministic key order, every document carries
// "schema": "1". Rationals and valuations are serialised as strings.
std::string invariants_report(const StandardModel& m);
std::string reconstruct_report(const CianiTuple& t);
std::string classify_report(const CianiTuple& t, const mpz_class& p);
std::string conductor_report(const CianiTuple& t, const mpz_class& p);
std::string scan_report_primes(const CianiTuple& t, const std::vector<mpz_class>& primes);
std::string scan_report_bound(const CianiTuple& t, unsigned long bound);

}  // namespace ciani
