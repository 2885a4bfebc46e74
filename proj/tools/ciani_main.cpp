// Command-line front end; all computation goes through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <string>

#include "ciani.h"

namespace {

using json = nlohmann::ordered_json;

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_scan_text(const json& doc, std::ostream& os) {
  os << "invariants: " << doc["invariants"].dump() << "\n";
  const auto& rows = doc["rows"];
  os << std::left << std::setw(10) << "prime" << std::setw(20) << "reduction" << std::setw(4)
     << "e" << std::setw(5) << "deg" << std::setw(6) << "f" << std::setw(8) << "nuQ"
     << "nuDelta" << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(10) << cell(r["prime"]) << std::setw(20) << cell(r["reduction"])
       << std::setw(4) << (r.contains("e") ? cell(r["e"]) : "-") << std::setw(5)
       << cell(r["splitting_degree"]) << std::setw(6) << cell(r["conductor_min"]) << std::setw(8)
       << cell(r["nuQ"]) << cell(r["nuDelta"]) << "\n";
  }
  if (doc.contains("unsupported_primes") && !doc["unsupported_primes"].empty())
    os << "unsupported primes (p <= 3): " << doc["unsupported_primes"].dump() << "\n";
  if (doc.contains("unscanned_cofactors") && !doc["unscanned_cofactors"].empty())
    os << "unscanned cofactors: " << doc["unscanned_cofactors"].dump() << "\n";
  if (doc.contains("note")) os << "note: " << doc["note"].get<std::string>() << "\n";
}

void render_object_text(const json& doc, std::ostream& os) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema") continue;
    os << std::left << std::setw(28) << key << " " << cell(value) << "\n";
  }
}

int emit(ciani_status st, ciani_result* r, bool text) {
  if (st == CIANI_OK) {
    const char* j = ciani_result_json(r);
    if (!text) {
      std::cout << j << "\n";
    } else {
      json doc = json::parse(j);
      if (doc.contains("rows"))
        render_scan_text(doc, std::cout);
      else
        render_object_text(doc, std::cout);
    }
  } else {
    const char* msg = ciani_result_error(r);
    std::cerr << "error: " << (msg ? msg : "unknown failure") << "\n";
  }
  ciani_result_free(r);
  return (int)st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ciani quartic invariants, reduction types and conductor exponents"};
  app.require_subcommand(1);
  bool text = false;
  bool json_flag = false;
  app.add_flag("--text", text, "aligned text output");
  app.add_flag("--json", json_flag, "JSON output (default)");

  std::string model, invariants, prime, primes, bound;

  auto* inv = app.add_subcommand("invariants", "invariants and derived quantities of a model");
  inv->add_option("--model", model, "A,B,C,a,b,c")->required();

  auto* rec = app.add_subcommand("reconstruct", "models with prescribed invariants");
  rec->add_option("--invariants", invariants, "I3,I3',I3'',I6")->required();

  auto* cls = app.add_subcommand("classify", "reduction type at a prime p > 3");
  cls->add_option("--invariants", invariants, "I3,I3',I3'',I6")->required();
  cls->add_option("--prime", prime, "prime p > 3")->required();

  auto* con = app.add_subcommand("conductor", "conductor exponents at a prime p > 3");
  con->add_option("--invariants", invariants, "I3,I3',I3'',I6")->required();
  con->add_option("--prime", prime, "prime p > 3")->required();

  auto* scan = app.add_subcommand("scan", "conductor scan over primes");
  scan->add_option("--invariants", invariants, "I3,I3',I3'',I6")->required();
  auto* opt_primes = scan->add_option("--primes", primes, "comma-separated primes");
  auto* opt_bound = scan->add_option("--bound", bound, "scan candidate primes up to this bound");
  opt_primes->excludes(opt_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  ciani_result* r = nullptr;
  ciani_status st = CIANI_OK;
  if (inv->parsed()) {
    st = ciani_invariants(model.c_str(), &r);
  } else if (rec->parsed()) {
    st = ciani_reconstruct(invariants.c_str(), &r);
  } else if (cls->parsed()) {
    st = ciani_classify(invariants.c_str(), prime.c_str(), &r);
  } else if (con->parsed()) {
    st = ciani_conductor(invariants.c_str(), prime.c_str(), &r);
  } else if (scan->parsed()) {
    if (opt_primes->count() == 0 && opt_bound->count() == 0) {
      std::cerr << "error: scan needs --primes or --bound\n";
      return 2;
    }
    st = opt_primes->count() ? ciani_scan_primes(invariants.c_str(), primes.c_str(), &r)
                             : ciani_scan_bound(invariants.c_str(), bound.c_str(), &r);
  }
  return emit(st, r, text && !json_flag);
}
