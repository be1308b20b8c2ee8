#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/homology.hpp"
#include "coxgenus/poly.hpp"

namespace coxgenus {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kMaxReportRank = 24;
inline constexpr int kLargeRankWarning = 16;

struct DegreeHomology {
  int degree = 0;
  std::size_t chains = 0;
  HomologyGroup group;
  bool operator==(const DegreeHomology&) const = default;
};

struct PoincareEntry {
  std::vector<std::string> subset;
  std::string type;
  IntPoly polynomial;
  Integer order;
  bool operator==(const PoincareEntry&) const = default;
};

// Schwarz genus bounds for the W-covering of the Artin configuration space.
struct GenusReport {
  int schema_version = kReportSchemaVersion;
  std::string system_name;
  int rank = 0;
  int vd = 0;
  std::optional<int> hvd;
  std::optional<int> rhvd;
  bool affine_like = false;
  bool all_proper_finite = false;
  int genus_lower = 1;  // rhvd + 1, or 1 without rational homology
  int genus_upper = 1;  // vd + 1
  std::optional<int> genus_exact;  // only for affine-like systems
  std::vector<DegreeHomology> homology;
  std::vector<PoincareEntry> poincare;  // one per maximal simplex
  std::vector<std::string> notes;

  bool operator==(const GenusReport&) const = default;
};

// Throws InputError when rank exceeds kMaxReportRank.
GenusReport genus_report(const CoxeterSystem& sys);

// Violated report invariants, empty when consistent.
std::vector<std::string> report_invariant_violations(const GenusReport& r);

nlohmann::json to_json(const GenusReport& r);
GenusReport genus_report_from_json(const nlohmann::json& j);

std::string format_report(const GenusReport& r);

}  // namespace coxgenus
