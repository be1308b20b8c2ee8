#include "coxgenus/coxeter_system.hpp"

#include <set>

#include "coxgenus/errors.hpp"

namespace coxgenus {

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators,
                             std::vector<std::vector<CoxeterEntry>> matrix,
                             std::string name)
    : generators_(std::move(generators)),
      matrix_(std::move(matrix)),
      name_(std::move(name)) {
  const std::size_t n = generators_.size();
  if (n == 0) throw InputError("Coxeter system needs at least one generator");
  if (n > static_cast<std::size_t>(kMaxGenerators))
    throw InputError("at most " + std::to_string(kMaxGenerators) +
                     " generators are supported");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw InputError("empty generator name");
    if (!seen.insert(g).second) throw InputError("duplicate generator '" + g + "'");
  }
  if (matrix_.size() != n) throw InputError("matrix must be square of size |generators|");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) throw InputError("matrix must be square of size |generators|");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i][i] != 1)
      throw InputError("diagonal entry m(" + generators_[i] + "," + generators_[i] +
                       ") must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_[i][j] != matrix_[j][i])
        throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      if (i != j && matrix_[i][j] < 2)
        throw InputError("off-diagonal entry m(" + generators_[i] + "," + generators_[j] +
                         ") must be >= 2 or infinity");
    }
  }
  if (name_.empty()) name_ = "custom";
}

int CoxeterSystem::index_of(std::string_view generator) const {
  for (int s = 0; s < rank(); ++s) {
    if (generators_[s] == generator) return s;
  }
  throw InputError("unknown generator '" + std::string(generator) + "'");
}

Subset CoxeterSystem::subset_of(const std::vector<std::string>& names) const {
  Subset out;
  for (const auto& g : names) out = out.with(index_of(g));
  return out;
}

std::string CoxeterSystem::describe(Subset J) const {
  std::string out = "{";
  bool first = true;
  for (int s : J.members()) {
    if (!first) out += ",";
    out += generators_[s];
    first = false;
  }
  return out + "}";
}

nlohmann::json CoxeterSystem::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : matrix_) {
    nlohmann::json r = nlohmann::json::array();
    for (CoxeterEntry e : row) r.push_back(e == kInfinity ? 0u : e);
    rows.push_back(std::move(r));
  }
  return {{"generators", generators_}, {"matrix", std::move(rows)}};
}

CoxeterSystem parse_system(const nlohmann::json& input, std::string name) {
  if (!input.is_object()) throw InputError("diagram must be a JSON object");
  if (!input.contains("generators") || !input["generators"].is_array())
    throw InputError("diagram needs a \"generators\" array");
  if (!input.contains("matrix") || !input["matrix"].is_array())
    throw InputError("diagram needs a \"matrix\" array");

  std::vector<std::string> gens;
  for (const auto& g : input["generators"]) {
    if (!g.is_string()) throw InputError("generator identifiers must be strings");
    gens.push_back(g.get<std::string>());
  }
  std::vector<std::vector<CoxeterEntry>> matrix;
  for (const auto& row : input["matrix"]) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<CoxeterEntry> r;
    for (const auto& e : row) {
      if (!e.is_number_integer() || e.get<long long>() < 0 ||
          e.get<long long>() >= static_cast<long long>(kInfinity))
        throw InputError("matrix entries must be non-negative integers");
      auto v = static_cast<CoxeterEntry>(e.get<long long>());
      r.push_back(v == 0 ? kInfinity : v);
    }
    matrix.push_back(std::move(r));
  }
  if (name.empty() && input.contains("name") && input["name"].is_string())
    name = input["name"].get<std::string>();
  return CoxeterSystem(std::move(gens), std::move(matrix), std::move(name));
}

CoxeterSystem parse_system_text(std::string_view text, std::string name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_system(j, std::move(name));
}

std::vector<Subset> irreducible_components(const CoxeterSystem& sys, Subset J) {
  std::vector<Subset> out;
  Subset unvisited = J;
  while (!unvisited.empty()) {
    int start = unvisited.members().front();
    Subset component = Subset::singleton(start);
    std::vector<int> stack{start};
    unvisited = unvisited.without(start);
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int t : unvisited.members()) {
        if (sys.m(s, t) >= 3) {
          component = component.with(t);
          unvisited = unvisited.without(t);
          stack.push_back(t);
        }
      }
    }
    out.push_back(component);
  }
  return out;
}

}  // namespace coxgenus
