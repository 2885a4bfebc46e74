#include "ciani.h"

#include <functional>
#include <new>
#include <string>
#include <vector>

#include "ciani/report_json.hpp"

struct ciani_result {
  std::string json;
  std::string error;
  bool ok = false;
};

namespace {

ciani_status run(ciani_result** out, const std::function<std::string()>& fn) {
  if (out == nullptr) return CIANI_ERR_INTERNAL;
  *out = nullptr;
  auto* r = new (std::nothrow) ciani_result;
  if (r == nullptr) return CIANI_ERR_INTERNAL;
  *out = r;
  try {
    r->json = fn();
    r->ok = true;
    return CIANI_OK;
  } catch (const ciani::Error& e) {
    r->error = e.what();
    return (ciani_status)(int)e.kind();
  } catch (const std::exception& e) {
    r->error = e.what();
    return CIANI_ERR_INTERNAL;
  }
}

std::string need(const char* s, const char* what) {
  if (s == nullptr) throw ciani::Error(ciani::ErrorKind::parse, std::string("missing ") + what);
  return std::string(s);
}

}  // namespace

extern "C" {

const char* ciani_version(void) { return "1.0.0"; }

ciani_status ciani_invariants(const char* model_csv, ciani_result** out) {
  return run(out, [&] {
    return ciani::invariants_report(ciani::parse_model_csv(need(model_csv, "model")));
  });
}

ciani_status ciani_reconstruct(const char* invariants_csv, ciani_result** out) {
  return run(out, [&] {
    return ciani::reconstruct_report(ciani::parse_tuple_csv(need(invariants_csv, "invariants")));
  });
}

ciani_status ciani_classify(const char* invariants_csv, const char* prime, ciani_result** out) {
  return run(out, [&] {
    return ciani::classify_report(ciani::parse_tuple_csv(need(invariants_csv, "invariants")),
                                  ciani::parse_prime(need(prime, "prime")));
  });
}

ciani_status ciani_conductor(const char* invariants_csv, const char* prime, ciani_result** out) {
  return run(out, [&] {
    return ciani::conductor_report(ciani::parse_tuple_csv(need(invariants_csv, "invariants")),
                                   ciani::parse_prime(need(prime, "prime")));
  });
}

ciani_status ciani_scan_primes(const char* invariants_csv, const char* primes_csv,
                               ciani_result** out) {
  return run(out, [&] {
    auto t = ciani::parse_tuple_csv(need(invariants_csv, "invariants"));
    std::vector<mpz_class> primes;
    std::string list = need(primes_csv, "primes"), cur;
    auto flush = [&] {
      if (!cur.empty()) {
        primes.push_back(ciani::parse_prime(cur));
        cur.clear();
      }
    };
    for (char ch : list) {
      if (ch == ',')
        flush();
      else
        cur.push_back(ch);
    }
    flush();
    if (primes.empty()) throw ciani::Error(ciani::ErrorKind::parse, "empty prime list");
    return ciani::scan_report_primes(t, primes);
  });
}

ciani_status ciani_scan_bound(const char* invariants_csv, const char* bound, ciani_result** out) {
  return run(out, [&] {
    auto t = ciani::parse_tuple_csv(need(invariants_csv, "invariants"));
    ciani::Rational b = ciani::Rational::from_string(need(bound, "bound"));
    if (!b.is_integer() || b.sign() <= 0 || !b.numerator().fits_ulong_p())
      throw ciani::Error(ciani::ErrorKind::parse, "bound must be a positive integer");
    return ciani::scan_report_bound(t, b.numerator().get_ui());
  });
}

const char* ciani_result_json(const ciani_result* r) {
  return (r != nullptr && r->ok) ? r->json.c_str() : nullptr;
}

const char* ciani_result_error(const ciani_result* r) {
  return (r != nullptr && !r->ok) ? r->error.c_str() : nullptr;
}

void ciani_result_free(ciani_result* r) { delete r; }

}  // extern "C"
