#include "coxgenus/report.hpp"

#include <iomanip>
#include <sstream>

#include "coxgenus/classifier.hpp"
#include "coxgenus/errors.hpp"
#include "coxgenus/nerve.hpp"

namespace coxgenus {
namespace {

nlohmann::json optional_int(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<int> optional_int_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

std::string optional_text(const std::optional<int>& v, const char* none) {
  return v ? std::to_string(*v) : std::string(none);
}

}  // namespace

GenusReport genus_report(const CoxeterSystem& sys) {
  if (sys.rank() > kMaxReportRank)
    throw InputError("genus report supports at most " + std::to_string(kMaxReportRank) +
                     " generators");
  GenusReport r;
  r.system_name = sys.name();
  r.rank = sys.rank();

  const NerveComplex K = build_nerve(sys);
  const ChainComplex d0 = d0_complex(K);
  const auto table = homology_table(d0);
  for (int k = 0; k <= d0.top_degree(); ++k) r.homology.push_back({k, d0.dim(k), table[k]});

  r.vd = K.vd();
  r.hvd = hvd(table);
  r.rhvd = rhvd(table);
  r.affine_like = r.hvd && *r.hvd == r.vd;
  r.all_proper_finite = all_proper_finite(sys);
  r.genus_upper = r.vd + 1;
  r.genus_lower = r.rhvd ? *r.rhvd + 1 : 1;
  if (r.affine_like) r.genus_exact = r.vd + 1;

  for (Subset J : K.maximal()) {
    PoincareEntry e;
    for (int s : J.members()) e.subset.push_back(sys.generator(s));
    const auto cls = classify(sys, J);
    e.type = cls.type_name();
    e.polynomial = poincare_polynomial(sys, J);
    e.order = cls.order;
    r.poincare.push_back(std::move(e));
  }

  if (is_finite_type(sys, sys.all())) {
    r.notes.push_back(
        "finite type: the nerve is a full simplex and D0 is acyclic, so no lower bound beyond 1 "
        "follows; finite-type genera are not computed here and can lie strictly below vd+1 "
        "(the A5 covering has genus 5)");
  } else if (!r.affine_like) {
    r.notes.push_back("not affine-like (hvd < vd): only the interval [genusLower, genusUpper] is known");
  }
  if (sys.rank() > kLargeRankWarning)
    r.notes.push_back("rank above " + std::to_string(kLargeRankWarning) +
                      ": nerve enumeration is exponential in the rank");
  return r;
}

std::vector<std::string> report_invariant_violations(const GenusReport& r) {
  std::vector<std::string> out;
  if (r.genus_upper != r.vd + 1) out.push_back("genusUpper != vd + 1");
  if (r.genus_lower != (r.rhvd ? *r.rhvd + 1 : 1)) out.push_back("genusLower != rhvd + 1");
  if (r.affine_like != (r.hvd && *r.hvd == r.vd)) out.push_back("affineLike != (vd == hvd)");
  if (r.affine_like && r.genus_exact != r.vd + 1) out.push_back("genusExact != vd + 1");
  if (!r.affine_like && r.genus_exact) out.push_back("genusExact set without affine-like");
  if (r.genus_lower > r.genus_upper) out.push_back("genusLower > genusUpper");
  if (r.rhvd && (!r.hvd || *r.rhvd > *r.hvd)) out.push_back("rhvd > hvd");
  return out;
}

nlohmann::json to_json(const GenusReport& r) {
  nlohmann::json homology = nlohmann::json::array();
  for (const auto& h : r.homology) {
    auto g = homology_to_json(h.group);
    g["degree"] = h.degree;
    g["chains"] = h.chains;
    homology.push_back(std::move(g));
  }
  nlohmann::json poincare = nlohmann::json::array();
  for (const auto& p : r.poincare) {
    poincare.push_back({{"subset", p.subset},
                        {"type", p.type},
                        {"coefficients", poly_to_json(p.polynomial)},
                        {"order", integer_to_json(p.order)}});
  }
  return {{"schemaVersion", r.schema_version},
          {"systemName", r.system_name},
          {"rank", r.rank},
          {"vd", r.vd},
          {"hvd", optional_int(r.hvd)},
          {"rhvd", optional_int(r.rhvd)},
          {"affineLike", r.affine_like},
          {"allProperFinite", r.all_proper_finite},
          {"genusLower", r.genus_lower},
          {"genusUpper", r.genus_upper},
          {"genusExact", optional_int(r.genus_exact)},
          {"homologyTable", std::move(homology)},
          {"poincareTable", std::move(poincare)},
          {"notes", r.notes}};
}

GenusReport genus_report_from_json(const nlohmann::json& j) {
  GenusReport r;
  try {
    r.schema_version = j.at("schemaVersion").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw InputError("unsupported report schemaVersion " + std::to_string(r.schema_version));
    r.system_name = j.at("systemName").get<std::string>();
    r.rank = j.at("rank").get<int>();
    r.vd = j.at("vd").get<int>();
    r.hvd = optional_int_from(j.at("hvd"));
    r.rhvd = optional_int_from(j.at("rhvd"));
    r.affine_like = j.at("affineLike").get<bool>();
    r.all_proper_finite = j.at("allProperFinite").get<bool>();
    r.genus_lower = j.at("genusLower").get<int>();
    r.genus_upper = j.at("genusUpper").get<int>();
    r.genus_exact = optional_int_from(j.at("genusExact"));
    for (const auto& h : j.at("homologyTable")) {
      r.homology.push_back({h.at("degree").get<int>(), h.at("chains").get<std::size_t>(),
                            homology_from_json(h)});
    }
    for (const auto& p : j.at("poincareTable")) {
      r.poincare.push_back({p.at("subset").get<std::vector<std::string>>(),
                            p.at("type").get<std::string>(), poly_from_json(p.at("coefficients")),
                            integer_from_json(p.at("order"))});
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string format_report(const GenusReport& r) {
  std::ostringstream out;
  out << "system          " << r.system_name << " (rank " << r.rank << ")\n"
      << "vd              " << r.vd << "\n"
      << "hvd             " << optional_text(r.hvd, "none") << "\n"
      << "rhvd            " << optional_text(r.rhvd, "none") << "\n"
      << "affine-like     " << (r.affine_like ? "yes" : "no") << "\n"
      << "proper finite   " << (r.all_proper_finite ? "yes" : "no") << "\n"
      << "genus bounds    " << r.genus_lower << " <= g <= " << r.genus_upper << "\n"
      << "genus           " << optional_text(r.genus_exact, "unknown") << "\n\n"
      << "H_k(D0)     k  chains    rank  torsion\n";
  for (const auto& h : r.homology) {
    out << "          " << std::setw(3) << h.degree << std::setw(8) << h.chains << std::setw(8)
        << h.group.free_rank << "  ";
    if (h.group.torsion.empty()) out << "-";
    for (std::size_t i = 0; i < h.group.torsion.size(); ++i)
      out << (i ? " + " : "") << "Z/" << h.group.torsion[i].get_str();
    out << "\n";
  }
  out << "\nmaximal finite parabolics\n";
  for (const auto& p : r.poincare) {
    out << "  {";
    for (std::size_t i = 0; i < p.subset.size(); ++i) out << (i ? "," : "") << p.subset[i];
    out << "}  " << p.type << "  |W_J| = " << p.order.get_str() << "  W_J(q) = "
        << p.polynomial.to_string() << "\n";
  }
  for (const auto& n : r.notes) out << "\nnote: " << n << "\n";
  return out.str();
}

}  // namespace coxgenus
