#include "coxgenus/classifier.hpp"

#include <algorithm>
#include <array>

namespace coxgenus {
namespace {

// Matches one connected component of the Coxeter graph against the
// finite-type catalog.
std::optional<FiniteTypeLabel> match_component(const CoxeterSystem& sys, Subset comp) {
  const auto nodes = comp.members();
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return FiniteTypeLabel{Family::A, 1};

  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const CoxeterEntry m = sys.m(nodes[a], nodes[b]);
      if (m == kInfinity) return std::nullopt;
      if (m >= 3) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
      }
    }
  }
  auto label = [&](int a, int b) { return sys.m(nodes[a], nodes[b]); };

  if (n == 2) {
    const CoxeterEntry m = label(0, 1);
    if (m == 3) return FiniteTypeLabel{Family::A, 2};
    if (m == 4) return FiniteTypeLabel{Family::B, 2};
    return FiniteTypeLabel{Family::I2, 2, m};
  }
  if (edges != n - 1) return std::nullopt;  // connected with a cycle

  std::vector<int> branch;
  for (int a = 0; a < n; ++a) {
    if (adj[a].size() > 3) return std::nullopt;
    if (adj[a].size() == 3) branch.push_back(a);
  }

  if (branch.empty()) {
    // A path: read its labels from one end.
    int start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<CoxeterEntry> labels;
    for (int prev = -1, cur = start, step = 0; step < n - 1; ++step) {
      const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      labels.push_back(label(cur, next));
      prev = cur;
      cur = next;
    }
    const int high = static_cast<int>(
        std::count_if(labels.begin(), labels.end(), [](CoxeterEntry m) { return m > 3; }));
    if (high == 0) return FiniteTypeLabel{Family::A, n};
    if (high > 1) return std::nullopt;
    if (labels.back() > 3) std::reverse(labels.begin(), labels.end());
    const CoxeterEntry m = labels.front();
    if (m == 4) return FiniteTypeLabel{Family::B, n};
    if (m == 5 && (n == 3 || n == 4)) return FiniteTypeLabel{Family::H, n};
    if (n == 4 && labels[1] == 4) return FiniteTypeLabel{Family::F, 4};
    return std::nullopt;
  }

  if (branch.size() > 1) return std::nullopt;
  for (int a = 0; a < n; ++a) {
    for (int b : adj[a]) {
      if (label(a, b) != 3) return std::nullopt;
    }
  }
  // Arm lengths around the branch node.
  const int center = branch.front();
  std::array<int, 3> arms{};
  for (int k = 0; k < 3; ++k) {
    int prev = center, cur = adj[center][k], len = 1;
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms[k] = len;
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return std::nullopt;
  if (arms[1] == 1) return FiniteTypeLabel{Family::D, n};
  if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return FiniteTypeLabel{Family::E, n};
  return std::nullopt;
}

}  // namespace

std::string FiniteTypeLabel::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F4";
    case Family::H: return "H" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

std::string ClassificationResult::type_name() const {
  if (!finite) return "infinite";
  if (components.empty()) return "trivial";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " x ";
    out += c.label->name();
  }
  return out;
}

ClassificationResult classify(const CoxeterSystem& sys, Subset J) {
  ClassificationResult result;
  for (Subset comp : irreducible_components(sys, J)) {
    auto label = match_component(sys, comp);
    if (label) {
      result.order *= catalog_order(*label);
    } else {
      result.finite = false;
    }
    result.components.push_back({comp, label});
  }
  if (!result.finite) result.order = 0;
  return result;
}

std::vector<int> degrees_of(const FiniteTypeLabel& label) {
  const int n = label.rank;
  std::vector<int> d;
  switch (label.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::H:
      if (n == 3) d = {2, 6, 10};
      if (n == 4) d = {2, 12, 20, 30};
      break;
    case Family::I2: d = {2, static_cast<int>(label.m)}; break;
  }
  return d;
}

Integer catalog_order(const FiniteTypeLabel& label) {
  Integer order = 1;
  for (int d : degrees_of(label)) order *= d;
  return order;
}

bool all_proper_finite(const CoxeterSystem& sys) {
  const Subset S = sys.all();
  if (is_finite_type(sys, S)) return false;
  // Downward closure: checking the maximal proper subsets suffices.
  for (int s = 0; s < sys.rank(); ++s) {
    if (!is_finite_type(sys, S.without(s))) return false;
  }
  return true;
}

}  // namespace coxgenus
