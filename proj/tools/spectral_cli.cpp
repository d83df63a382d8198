// spectral: tables, exemplars, products and sweeps for finite real spectral triples.
//
// Exit status: 0 all checks pass, 1 a mathematical failure (undefined product,
// mismatch), 2 usage error.

#include "spectral/exemplars.hpp"
#include "spectral/json_io.hpp"
#include "spectral/products.hpp"
#include "spectral/runs.hpp"
#include "spectral/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace spectral;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

KOClass parse_class(const std::string& text) {
  try {
    return KOClass::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

int cmd_table(const std::string& which, bool json) {
  TableKind kind;
  try {
    kind = parse_table_kind(which);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (json) {
    std::cout << table_to_json(kind).dump(2) << '\n';
  } else {
    std::cout << render_table(kind);
  }
  return kOk;
}

int cmd_mnemonic(bool json) {
  const MnemonicDerivation m = derive_table_mnemonic();
  bool matches = true;
  for (std::size_t i = 0; i < 16; ++i) matches = matches && m.table[i] == signs_of_class(all_classes()[i]);
  if (json) {
    Json table = Json::object();
    for (std::size_t i = 0; i < 16; ++i) table[all_classes()[i].to_string()] = signs_to_json(m.table[i]);
    std::cout << Json{{"log", m.log},
                      {"self_closed_pairs", m.self_closed_pair_count},
                      {"pairs_squaring_to_zero", m.squares_to_zero_pair_count},
                      {"chain_solutions", m.chain_solution_count},
                      {"table", table},
                      {"matches_complete_table", matches}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& line : m.log) std::cout << line << '\n';
    std::cout << '\n' << render_complete(m.table);
    std::cout << "derived table " << (matches ? "matches" : "DIFFERS FROM") << " the complete table\n";
  }
  return matches ? kOk : kMathFailure;
}

struct ProductArgs {
  std::string left, right;
  std::string convention;
  bool traditional = false;
  std::string dirac = "D";
  bool json = false;
  std::string out;
};

int cmd_product(const ProductArgs& a) {
  const KOClass ci = parse_class(a.left);
  const KOClass cj = parse_class(a.right);
  const auto& cat = default_catalog();
  const RealSpectralTriple& ti = cat.at(ci);
  const RealSpectralTriple& tj = cat.at(cj);

  std::optional<KozulConvention> conv;
  if (!a.convention.empty()) {
    try {
      conv = parse_convention(a.convention);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  DiracChoice choice = DiracChoice::D;
  if (a.dirac == "Dtilde") {
    choice = DiracChoice::DTilde;
  } else if (a.dirac != "D") {
    throw UsageError("--dirac must be D or Dtilde");
  }

  const std::string head = ci.to_string() + " x " + cj.to_string();
  ProductReport r;
  try {
    if (a.traditional) {
      r = traditional_product(ti, tj, choice);
    } else {
      const KozulConvention k = conv.value_or(ci.parity() == Parity::Odd && cj.parity() == Parity::Even
                                                  ? KozulConvention::Second
                                                  : KozulConvention::First);
      r = graded_product(ti, tj, k);
    }
  } catch (const UnsupportedConvention& e) {
    throw UsageError(e.what());
  } catch (const UndefinedProduct& e) {
    std::cerr << head << ": " << e.what() << '\n'
              << "  the traditional product leaves J unable to commute or anticommute with D\n";
    if (a.json) {
      std::cout << Json{{"pair", {ci.to_string(), cj.to_string()}},
                        {"kind", "traditional"},
                        {"dirac_choice", to_string(choice)},
                        {"error", "UndefinedProduct"},
                        {"relation", e.relation()},
                        {"first_term_sign", to_int(e.first_term_sign())},
                        {"second_term_sign", to_int(e.second_term_sign())}}
                       .dump(2)
                << '\n';
    }
    return kMathFailure;
  } catch (const VariantMismatch& e) {
    std::cerr << head << ": " << e.what() << '\n';
    return kMathFailure;
  } catch (const OddTriple& e) {
    std::cerr << head << ": " << e.what() << '\n';
    return kMathFailure;
  }

  if (a.json) {
    std::cout << product_report_to_json(r).dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& [name, ok] : r.checks) passed += ok;
    std::cout << head << " (" << (r.dirac_choice ? "traditional, choice " + to_string(*r.dirac_choice)
                                                  : "graded, " + to_string(r.convention) + " convention")
              << ")\n"
              << "  Hilbert dimension  " << r.result.hilbert_dim << '\n'
              << "  predicted          " << r.predicted << '\n'
              << "  extracted          " << r.extracted << '\n'
              << "  class              " << r.cls << '\n'
              << "  checks             " << passed << "/" << r.checks.size() << " passed\n";
    for (const auto& [name, ok] : r.checks)
      if (!ok) std::cout << "  FAIL " << name << '\n';
  }
  if (!a.out.empty()) write_file(a.out, triple_to_json(r.result));
  return r.passed() ? kOk : kMathFailure;
}

int report(const RunReport& r, bool json) {
  if (json) {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    std::cout << r.summary();
  }
  return r.exit_status();
}

int cmd_exemplar(const std::string& cls, const std::string& out) {
  const KOClass c = parse_class(cls);
  const RealSpectralTriple t = build_exemplar(c);
  const Validation v = validate(t);
  const Json j = triple_to_json(t);
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_file(out, j);
    std::cout << "wrote " << c << " exemplar on C^" << t.hilbert_dim << " to " << out << '\n';
  }
  return v.cls == c ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite real spectral triples: KO-dimension tables, exemplars and graded products"};
  app.require_subcommand(1);

  std::string table_name;
  bool table_json = false;
  auto* table = app.add_subcommand("table", "Print a KO-dimension or product table");
  table->add_option("which", table_name, "classic | extended | complete | product")->required();
  table->add_flag("--json", table_json, "Emit JSON");

  bool mn_json = false;
  auto* mnemonic = app.add_subcommand("mnemonic", "Derive the complete table from the product rule");
  mnemonic->add_flag("--json", mn_json, "Emit JSON");

  ProductArgs pa;
  auto* product = app.add_subcommand("product", "Product of two exemplar triples");
  product->add_option("class_i", pa.left, "First class, e.g. 2_U")->required();
  product->add_option("class_j", pa.right, "Second class, e.g. 6_U")->required();
  product->add_option("--convention", pa.convention, "first | second");
  auto* trad = product->add_flag("--traditional", pa.traditional, "Ungraded product with no grading insertions");
  product->add_option("--dirac", pa.dirac, "D | Dtilde (traditional product only)")->needs(trad);
  product->add_flag("--json", pa.json, "Emit the report as JSON");
  product->add_option("--out", pa.out, "Write the product triple as JSON");

  bool sweep_json = false, serial = false;
  auto* sweep = app.add_subcommand("sweep", "Check every pair, the traditional matrix and associativity");
  sweep->add_flag("--json", sweep_json, "Emit JSON");
  sweep->add_flag("--serial", serial, "Run on one thread");

  bool dga_json = false;
  auto* dga = app.add_subcommand("dga-check", "Validate the exterior *-DGA and its tensor products");
  dga->add_flag("--json", dga_json, "Emit JSON");

  std::string ex_class, ex_out;
  auto* exemplar = app.add_subcommand("exemplar", "Build the exemplar triple of a class");
  exemplar->add_option("class", ex_class, "Class, e.g. 3_L")->required();
  exemplar->add_option("--out", ex_out, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table) return cmd_table(table_name, table_json);
    if (*mnemonic) return cmd_mnemonic(mn_json);
    if (*product) return cmd_product(pa);
    if (*sweep) {
      SweepOptions opts;
      opts.parallel = !serial;
      return report(run_sweep(opts), sweep_json);
    }
    if (*dga) return report(run_dga_check(), dga_json);
    if (*exemplar) return cmd_exemplar(ex_class, ex_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMathFailure;
  }
  return kUsage;
}
