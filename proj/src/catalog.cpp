#include <charconv>
#include <regex>
#include <string_view>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/errors.hpp"

namespace coxgenus {
namespace {

struct Edge {
  int a, b;
  CoxeterEntry m;
};

CoxeterSystem from_edges(int rank, const std::vector<Edge>& edges, std::string name) {
  // s, t, u, ... up to rank 8, then s1..sn.
  static constexpr std::string_view kLetters = "stuvwxyz";
  std::vector<std::string> gens;
  for (int i = 0; i < rank; ++i) {
    gens.push_back(rank <= static_cast<int>(kLetters.size()) ? std::string(1, kLetters[i])
                                                              : "s" + std::to_string(i + 1));
  }
  std::vector<std::vector<CoxeterEntry>> m(rank, std::vector<CoxeterEntry>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  for (const auto& e : edges) m[e.a][e.b] = m[e.b][e.a] = e.m;
  return CoxeterSystem(std::move(gens), std::move(m), std::move(name));
}

// Path 0 - 1 - ... - (count-1) starting at `first`, all labels 3.
void add_path(std::vector<Edge>& edges, int first, int count) {
  for (int i = first; i + 1 < first + count; ++i) edges.push_back({i, i + 1, 3});
}

// Star with three arms of the given lengths around node 0.
std::vector<Edge> star(int a, int b, int c) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next, 3});
      prev = next++;
    }
  }
  return edges;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("bad integer '" + s + "'");
  return v;
}

[[noreturn]] void unknown(std::string_view name) {
  throw InputError("unknown builtin '" + std::string(name) + "'");
}

CoxeterSystem finite(char family, int n, std::string name) {
  std::vector<Edge> e;
  switch (family) {
    case 'A':
      if (n < 1) unknown(name);
      add_path(e, 0, n);
      return from_edges(n, e, name);
    case 'B':
      if (n < 2) unknown(name);
      add_path(e, 0, n);
      e.back().m = 4;
      return from_edges(n, e, name);
    case 'D':
      if (n < 4) unknown(name);
      // Fork: nodes 0 and 1 both attached to 2, then a path to n-1.
      e.push_back({0, 2, 3});
      add_path(e, 1, n - 1);
      return from_edges(n, e, name);
    case 'E':
      if (n < 6 || n > 8) unknown(name);
      return from_edges(n, star(1, 2, n - 4), name);
    case 'F':
      if (n != 4) unknown(name);
      return from_edges(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}, name);
    case 'H':
      if (n != 3 && n != 4) unknown(name);
      add_path(e, 0, n);
      e.front().m = 5;
      return from_edges(n, e, name);
    default:
      unknown(name);
  }
}

CoxeterSystem affine(char family, int n, std::string name) {
  std::vector<Edge> e;
  const int rank = n + 1;
  switch (family) {
    case 'A':
      if (n < 1) unknown(name);
      if (n == 1) return from_edges(2, {{0, 1, kInfinity}}, name);
      add_path(e, 0, rank);
      e.push_back({rank - 1, 0, 3});
      return from_edges(rank, e, name);
    case 'B':
      if (n < 3) unknown(name);
      e.push_back({0, 2, 3});
      add_path(e, 1, n);
      e.push_back({n - 1, n, 4});
      return from_edges(rank, e, name);
    case 'C':
      if (n < 2) unknown(name);
      add_path(e, 0, rank);
      e.front().m = 4;
      e.back().m = 4;
      return from_edges(rank, e, name);
    case 'D':
      if (n < 4) unknown(name);
      e.push_back({0, 2, 3});
      add_path(e, 1, n - 1);
      e.push_back({n - 2, n, 3});
      return from_edges(rank, e, name);
    case 'E':
      if (n == 6) return from_edges(7, star(2, 2, 2), name);
      if (n == 7) return from_edges(8, star(1, 3, 3), name);
      if (n == 8) return from_edges(9, star(1, 2, 5), name);
      unknown(name);
    case 'F':
      if (n != 4) unknown(name);
      return from_edges(5, {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}}, name);
    case 'G':
      if (n != 2) unknown(name);
      return from_edges(3, {{0, 1, 6}, {1, 2, 3}}, name);
    default:
      unknown(name);
  }
}

}  // namespace

CoxeterSystem builtin_system(std::string_view name_view) {
  const std::string name(name_view);
  static const std::regex dihedral(R"(I2\((\d+)\))");
  static const std::regex typed(R"(([ABCDEFGH])(~?)(\d+))");
  std::smatch match;
  if (std::regex_match(name, match, dihedral)) {
    int m = parse_int(match[1]);
    if (m < 2) unknown(name);
    return from_edges(2, {{0, 1, static_cast<CoxeterEntry>(m)}}, name);
  }
  if (!std::regex_match(name, match, typed)) unknown(name);
  const char family = match[1].str()[0];
  const int n = parse_int(match[3]);
  if (match[2].length() == 0) {
    if (family == 'C' || family == 'G') unknown(name);
    return finite(family, n, name);
  }
  if (family == 'H') unknown(name);
  return affine(family, n, name);
}

std::vector<std::string> catalog_sample() {
  std::vector<std::string> out = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3",
                                  "B4", "B5", "D4", "D5", "D6", "E6", "E7", "E8",
                                  "F4", "H3", "H4", "I2(5)", "I2(6)", "I2(7)"};
  for (const auto& a : affine_catalog_sample()) out.push_back(a);
  return out;
}

std::vector<std::string> affine_catalog_sample() {
  return {"A~1", "A~2", "A~3", "A~4", "A~5", "B~3", "B~4", "B~5", "C~2", "C~3",
          "C~4", "D~4", "D~5", "E~6", "E~7", "E~8", "F~4", "G~2"};
}

}  // namespace coxgenus
