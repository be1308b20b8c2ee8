#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/integer.hpp"
#include "coxgenus/subset.hpp"

namespace coxgenus {

enum class Family { A, B, D, E, F, H, I2 };

// Irreducible finite Coxeter type. B and C coincide as Coxeter systems and
// are both labelled B; I2(3) and I2(4) are normalized to A2 and B2.
struct FiniteTypeLabel {
  Family family = Family::A;
  int rank = 1;
  CoxeterEntry m = 0;  // edge label, I2 only

  std::string name() const;
  bool operator==(const FiniteTypeLabel&) const = default;
};

struct ClassifiedComponent {
  Subset subset;
  std::optional<FiniteTypeLabel> label;  // nullopt: infinite
};

struct ClassificationResult {
  bool finite = true;
  std::vector<ClassifiedComponent> components;
  Integer order = 1;  // meaningful only when finite

  // "A2 x A1", "infinite" or "trivial".
  std::string type_name() const;
};

ClassificationResult classify(const CoxeterSystem& sys, Subset J);

inline bool is_finite_type(const CoxeterSystem& sys, Subset J) {
  return classify(sys, J).finite;
}

// Degrees of the reflection group; their product is the group order.
std::vector<int> degrees_of(const FiniteTypeLabel& label);
Integer catalog_order(const FiniteTypeLabel& label);

// W_S infinite while every proper parabolic is finite.
bool all_proper_finite(const CoxeterSystem& sys);

}  // namespace coxgenus
