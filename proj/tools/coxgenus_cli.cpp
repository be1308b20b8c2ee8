// coxgenus: nerve, Artin complex, flag resolution and genus bounds for a
// Coxeter system given as a JSON diagram or a builtin name.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxgenus/artin_chain.hpp"
#include "coxgenus/classifier.hpp"
#include "coxgenus/errors.hpp"
#include "coxgenus/nerve.hpp"
#include "coxgenus/poly.hpp"
#include "coxgenus/report.hpp"
#include "coxgenus/resolution.hpp"

using namespace coxgenus;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string builtin;
  bool json = false;
  std::size_t cap = kDefaultGroupCap;
  std::string subset;
  long q = 1;
  int kmax = 4;
  std::string rep = "sign";
};

CoxeterSystem load_system(const Options& opt) {
  if (!opt.builtin.empty() && !opt.input.empty())
    throw InputError("give either an input file or --builtin, not both");
  if (!opt.builtin.empty()) return builtin_system(opt.builtin);
  if (opt.input.empty()) throw InputError("no input: pass a diagram JSON file or --builtin NAME");
  if (opt.input != "-") {
    std::ifstream in(opt.input);
    if (!in) throw InputError("cannot open '" + opt.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system_text(buf.str(), opt.input);
  }
  std::stringstream buf;
  buf << std::cin.rdbuf();
  return parse_system_text(buf.str(), "stdin");
}

Subset parse_subset(const CoxeterSystem& sys, const std::string& text) {
  if (text.empty()) return sys.all();
  std::vector<std::string> names;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) names.push_back(item);
  }
  return sys.subset_of(names);
}

json names_of(const CoxeterSystem& sys, Subset J) {
  json out = json::array();
  for (int s : J.members()) out.push_back(sys.generator(s));
  return out;
}

json classification_json(const CoxeterSystem& sys, Subset J, const ClassificationResult& c) {
  json comps = json::array();
  for (const auto& comp : c.components) {
    comps.push_back({{"subset", names_of(sys, comp.subset)},
                     {"type", comp.label ? json(comp.label->name()) : json("infinite")}});
  }
  return {{"subset", names_of(sys, J)},
          {"finite", c.finite},
          {"type", c.type_name()},
          {"order", c.finite ? integer_to_json(c.order) : json(nullptr)},
          {"components", std::move(comps)}};
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << "]\n";
  }
}

json basis_labels(const CoxeterSystem& sys, const std::vector<Subset>& layer) {
  json out = json::array();
  for (Subset J : layer) out.push_back(names_of(sys, J));
  return out;
}

int run_classify(const Options& opt) {
  const auto sys = load_system(opt);
  const Subset J = parse_subset(sys, opt.subset);
  const auto c = classify(sys, J);
  if (opt.json) {
    std::cout << classification_json(sys, J, c).dump(2) << "\n";
    return 0;
  }
  std::cout << "W_" << sys.describe(J) << ": " << c.type_name();
  if (c.finite) std::cout << ", order " << c.order.get_str();
  std::cout << "\n";
  for (const auto& comp : c.components) {
    std::cout << "  " << sys.describe(comp.subset) << "  "
              << (comp.label ? comp.label->name() : "infinite") << "\n";
  }
  return 0;
}

int run_nerve(const Options& opt) {
  const auto sys = load_system(opt);
  const auto K = build_nerve(sys);
  if (opt.json) {
    json layers = json::array();
    for (int k = 0; k <= K.vd(); ++k) layers.push_back(basis_labels(sys, K.simplices(k)));
    std::cout << json{{"system", sys.name()},
                      {"vd", K.vd()},
                      {"simplices", std::move(layers)},
                      {"maximal", basis_labels(sys, K.maximal())}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "K(" << sys.name() << "): vd = " << K.vd() << ", " << K.size() << " simplices\n";
  for (int k = 0; k <= K.vd(); ++k) std::cout << "  |J| = " << k << ": " << K.simplices(k).size() << "\n";
  std::cout << "maximal:\n";
  for (Subset J : K.maximal()) std::cout << "  " << sys.describe(J) << "\n";
  return 0;
}

int run_homology(const Options& opt) {
  const auto sys = load_system(opt);
  const auto K = build_nerve(sys);
  const auto table = homology_table(d0_complex(K));
  if (opt.json) {
    json rows = json::array();
    for (std::size_t k = 0; k < table.size(); ++k) {
      auto g = homology_to_json(table[k]);
      g["degree"] = k;
      rows.push_back(std::move(g));
    }
    std::cout << json{{"system", sys.name()}, {"homologyTable", std::move(rows)}}.dump(2) << "\n";
    return 0;
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::cout << "H_" << k << "(D0) = Z^" << table[k].free_rank;
    for (const auto& t : table[k].torsion) std::cout << " + Z/" << t.get_str();
    std::cout << "\n";
  }
  return 0;
}

int run_poincare(const Options& opt) {
  const auto sys = load_system(opt);
  const Subset J = parse_subset(sys, opt.subset);
  const IntPoly p = poincare_polynomial(sys, J);
  if (opt.json) {
    std::cout << json{{"subset", names_of(sys, J)},
                      {"coefficients", poly_to_json(p)},
                      {"order", integer_to_json(eval_at(p, 1))}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << poly_to_json(p).dump() << "\n";
  return 0;
}

int run_artin(const Options& opt) {
  const auto sys = load_system(opt);
  const auto K = build_nerve(sys);
  const auto C = build_artin_complex(K);
  const auto spec = specialize(C, opt.q);
  const auto table = homology_table(spec.complex);
  const auto delta = delta_map(C);
  const auto cert = certify_short_exact(C, delta, quotient_L(C));
  const bool exact = std::all_of(cert.begin(), cert.end(), [](const auto& e) { return e.ok(); });

  if (opt.json) {
    json degrees = json::array();
    for (int k = 1; k <= C.top_degree(); ++k) {
      degrees.push_back({{"degree", k},
                         {"rows", basis_labels(sys, K.simplices(k - 1))},
                         {"cols", basis_labels(sys, K.simplices(k))},
                         {"boundary", poly_matrix_to_json(C.boundary(k))},
                         {"specialized", int_matrix_to_json(spec.complex.boundary(k))}});
    }
    json hom = json::array();
    for (std::size_t k = 0; k < table.size(); ++k) {
      auto g = homology_to_json(table[k]);
      g["degree"] = k;
      hom.push_back(std::move(g));
    }
    std::cout << json{{"system", sys.name()},
                      {"q", opt.q},
                      {"boundaries", std::move(degrees)},
                      {"specializedHomology", std::move(hom)},
                      {"chainCondition", C.chain_condition_failures().empty()},
                      {"shortExactSequence", exact}}
                     .dump(2)
              << "\n";
    return 0;
  }
  for (int k = 1; k <= C.top_degree(); ++k) {
    std::cout << "d_" << k << " (" << K.simplices(k - 1).size() << " x " << K.simplices(k).size()
              << ")\n";
    const auto& d = C.boundary(k);
    for (std::size_t i = 0; i < d.rows(); ++i) {
      std::cout << "    [";
      for (std::size_t j = 0; j < d.cols(); ++j) std::cout << (j ? " | " : "") << d(i, j).to_string();
      std::cout << "]\n";
    }
    std::cout << "  at q = " << opt.q << ":\n";
    print_matrix(std::cout, spec.complex.boundary(k));
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::cout << "H_" << k << " at q = " << opt.q << ": Z^" << table[k].free_rank;
    for (const auto& t : table[k].torsion) std::cout << " + Z/" << t.get_str();
    std::cout << "\n";
  }
  std::cout << "0 -> D -> D0 -> L -> 0 exact degreewise: " << (exact ? "yes" : "NO") << "\n";
  return exact ? 0 : 3;
}

int run_resolution(const Options& opt) {
  const auto sys = load_system(opt);
  const Representation rep = representation_from_string(opt.rep);
  if (opt.kmax < 0) throw InputError("--kmax must be non-negative");
  const auto K = build_nerve(sys);
  const ParabolicTables tables(K, opt.kmax + 1, opt.cap);
  const auto res = specialize_resolution(K, tables, opt.kmax, rep);
  const auto failures = res.complex.chain_condition_failures();
  const auto ext = verify_sign_extension(sys, opt.kmax, rep, opt.cap);

  if (opt.json) {
    json degrees = json::array();
    for (int k = 0; k <= opt.kmax; ++k) {
      json flags = json::array();
      for (const auto& f : res.flags[k]) flags.push_back(f.multiplicities());
      json d = {{"degree", k},
                {"flags", std::move(flags)},
                {"count", res.flags[k].size()},
                {"binomialBound", integer_to_json(flag_count_bound(sys.rank(), k))}};
      if (k >= 1) d["boundary"] = int_matrix_to_json(res.complex.boundary(k));
      degrees.push_back(std::move(d));
    }
    json ext_json = json::array();
    for (const auto& d : ext.degrees) {
      json e = {{"k", d.k},
                {"pass", d.pass},
                {"cochainFlags", d.cochain_flags},
                {"singleFlags", d.single_flags},
                {"otherFlags", d.other_flags}};
      if (d.witness) {
        e["witness"] = d.witness->multiplicities();
        e["witnessSource"] = d.witness_source->multiplicities();
        e["witnessValue"] = d.witness_value;
      }
      ext_json.push_back(std::move(e));
    }
    std::cout << json{{"system", sys.name()},
                      {"rep", to_string(rep)},
                      {"kmax", opt.kmax},
                      {"degrees", std::move(degrees)},
                      {"chainConditionPass", failures.empty()},
                      {"chainConditionFailures", failures},
                      {"signExtension", {{"pass", ext.pass()}, {"degrees", std::move(ext_json)}}}}
                     .dump(2)
              << "\n";
    return failures.empty() ? 0 : 3;
  }
  for (int k = 0; k <= opt.kmax; ++k) {
    const Integer bound = flag_count_bound(sys.rank(), k);
    std::cout << "degree " << k << ": " << res.flags[k].size() << " flags (binomial bound "
              << bound.get_str() << (bound != res.flags[k].size() ? ", not attained" : "") << ")\n";
    if (k >= 1) print_matrix(std::cout, res.complex.boundary(k));
  }
  std::cout << "dd = 0 audit (" << to_string(rep) << "): " << (failures.empty() ? "pass" : "FAIL")
            << "\n";
  for (const auto& d : ext.degrees) {
    std::cout << "extension k = " << d.k << ": " << (d.pass ? "pass" : "fail");
    if (d.witness) {
      std::cout << "  (coefficient " << d.witness_value << " from "
                << d.witness_source->describe(sys) << " on " << d.witness->describe(sys) << ")";
    }
    std::cout << "\n";
  }
  return failures.empty() ? 0 : 3;
}

int run_genus(const Options& opt) {
  const auto sys = load_system(opt);
  if (sys.rank() > kLargeRankWarning)
    std::cerr << "warning: rank " << sys.rank() << " above " << kLargeRankWarning
              << "; nerve enumeration is exponential in the rank\n";
  const auto report = genus_report(sys);
  if (opt.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << format_report(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter nerve, Artin complexes and Schwarz genus bounds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "diagram JSON file ('-' for stdin)");
    sub->add_option("--builtin", opt.builtin, "builtin system, e.g. A~2, B3, I2(7)");
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--cap", opt.cap, "group order cap for materialization")
        ->check(CLI::PositiveNumber);
  };

  std::function<int(const Options&)> action;
  auto command = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  command("classify", "finite-type classification of W_J", run_classify)
      ->add_option("--subset", opt.subset, "comma-separated generators (default: all)");
  command("nerve", "simplices and maximal faces of K(W)", run_nerve);
  command("homology", "integral homology of D0", run_homology);
  command("poincare", "Poincare polynomial W_J(q)", run_poincare)
      ->add_option("--subset", opt.subset, "comma-separated generators (default: all)");
  command("artin", "Artin complex boundaries and specialized homology", run_artin)
      ->add_option("--q", opt.q, "specialization point");
  auto* res = command("resolution", "truncated flag resolution with rank-1 coefficients",
                      run_resolution);
  res->add_option("--kmax", opt.kmax, "top total degree");
  res->add_option("--rep", opt.rep, "sign or trivial")->check(CLI::IsMember({"sign", "trivial"}));
  command("genus", "genus report", run_genus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotFiniteType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
