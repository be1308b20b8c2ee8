#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxgenus/finite_group.hpp"
#include "coxgenus/homology.hpp"
#include "coxgenus/nerve.hpp"

namespace coxgenus {

enum class Representation { Trivial, Sign };

std::string to_string(Representation rep);
Representation representation_from_string(const std::string& name);

// A flag Gamma_1 >= Gamma_2 >= ... of subsets of S, stored as the
// multiplicity vector a_s = #{i : s in Gamma_i}, so Gamma_i = {s : a_s >= i}.
class Flag {
 public:
  explicit Flag(std::vector<std::uint8_t> multiplicities);
  // Levels must be nested; trailing empty levels are ignored.
  static Flag from_levels(int rank, const std::vector<Subset>& levels);

  const std::vector<std::uint8_t>& multiplicities() const { return mult_; }
  int total() const;   // sum |Gamma_i|
  int length() const;  // number of nonempty levels
  Subset level(int i) const;  // 1-based; empty beyond length()
  std::vector<Subset> levels() const;

  std::string describe(const CoxeterSystem& sys) const;  // "({s1,s2} > {s1})"

  auto operator<=>(const Flag&) const = default;

 private:
  std::vector<std::uint8_t> mult_;
};

// All flags of total cardinality k with W_{Gamma_1} finite, ordered by
// multiplicity vector.
std::vector<Flag> enumerate_flags(const NerveComplex& K, int k);

// C(n+k-1, k): number of multiplicity vectors of total k.
Integer flag_count_bound(int rank, int k);

// Materialized W_J for every finite J with |J| <= max_size. Subsets over
// the cap are remembered and reported when requested.
class ParabolicTables {
 public:
  ParabolicTables(const NerveComplex& K, int max_size, std::size_t cap = kDefaultGroupCap);

  const CoxeterSystem& system() const { return system_; }
  // Throws CapExceeded naming J, or NotFiniteType.
  const FiniteGroupTable& get(Subset J) const;

 private:
  CoxeterSystem system_;
  std::unordered_map<std::uint32_t, FiniteGroupTable> tables_;
  std::unordered_map<std::uint32_t, std::string> over_cap_;
};

struct FlagBoundaryTerm {
  Flag target;
  Word beta;               // normal form in W_{Gamma_i}
  unsigned beta_length = 0;
  int sign = 1;            // (-1)^alpha

  // Coefficient after tensoring with a rank-1 representation.
  int coefficient(Representation rep) const {
    return rep == Representation::Sign && beta_length % 2 == 1 ? -sign : sign;
  }
};

// d e(Gamma) as a list of terms (-1)^alpha beta e(Gamma'). The conjugate
// beta^{-1} a beta of each a in Gamma_{i+1} is computed in W_{Gamma_i}
// and must be a generator of Gamma_i \ {tau}.
std::vector<FlagBoundaryTerm> boundary_flag(const ParabolicTables& tables, const Flag& flag);

struct SpecializedResolution {
  Representation rep = Representation::Trivial;
  std::vector<std::vector<Flag>> flags;  // per degree 0..kmax
  ChainComplex complex;
};

SpecializedResolution specialize_resolution(const NerveComplex& K, const ParabolicTables& tables,
                                            int kmax, Representation rep);
SpecializedResolution specialize_resolution(const CoxeterSystem& sys, int kmax, Representation rep,
                                            std::size_t cap = kDefaultGroupCap);

struct SignExtensionDegree {
  int k = 0;
  std::size_t cochain_flags = 0;  // length-1 flags of total k
  std::size_t single_flags = 0;   // total k+1 with |Gamma_2| = 1, Gamma_3 empty
  std::size_t other_flags = 0;    // total k+1 with |Gamma_2| > 1 or Gamma_3 nonempty
  bool pass = true;
  std::optional<Flag> witness;         // flag where the coboundary is nonzero
  std::optional<Flag> witness_source;  // length-1 flag carrying it
  int witness_value = 0;
};

struct SignExtensionReport {
  Representation rep = Representation::Sign;
  std::vector<SignExtensionDegree> degrees;

  bool pass() const;
};

// For each k <= kmax: every cochain on length-1 flags of total k has
// coboundary vanishing on all longer flags of total k+1.
SignExtensionReport verify_sign_extension(const CoxeterSystem& sys, int kmax,
                                          Representation rep = Representation::Sign,
                                          std::size_t cap = kDefaultGroupCap);

}  // namespace coxgenus
