#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coxgenus/subset.hpp"

namespace coxgenus {

// Coxeter matrix entry. Files encode infinity as 0; in memory it is
// kInfinity so that "m >= 3" style tests include it.
using CoxeterEntry = std::uint32_t;
inline constexpr CoxeterEntry kInfinity = std::numeric_limits<CoxeterEntry>::max();

// A word in the Coxeter generators, as generator indices.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool operator==(const Word&) const = default;
};

// A word in the Artin generators g_s, as generator indices.
struct ArtinWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool operator==(const ArtinWord&) const = default;
};

// Generators S (in the order that defines every sign convention) and the
// symmetric Coxeter matrix m(s, s').
class CoxeterSystem {
 public:
  CoxeterSystem(std::vector<std::string> generators,
                std::vector<std::vector<CoxeterEntry>> matrix,
                std::string name = {});

  int rank() const { return static_cast<int>(generators_.size()); }
  CoxeterEntry m(int s, int t) const { return matrix_[s][t]; }
  const std::string& generator(int s) const { return generators_[s]; }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& name() const { return name_; }
  Subset all() const { return Subset::full(rank()); }

  // Throws InputError for unknown names.
  int index_of(std::string_view generator) const;
  Subset subset_of(const std::vector<std::string>& names) const;
  std::string describe(Subset J) const;  // "{s1,s3}"

  // File form: infinity written as 0.
  nlohmann::json to_json() const;

  bool operator==(const CoxeterSystem& o) const {
    return generators_ == o.generators_ && matrix_ == o.matrix_;
  }

 private:
  std::vector<std::string> generators_;
  std::vector<std::vector<CoxeterEntry>> matrix_;
  std::string name_;
};

// Parses {"generators": [...], "matrix": [[...]]}; 0 means infinity.
CoxeterSystem parse_system(const nlohmann::json& input, std::string name = {});
CoxeterSystem parse_system_text(std::string_view text, std::string name = {});

// Builtin catalog: A<n>, B<n>, D<n>, E6-8, F4, H3, H4, I2(<m>), A~<n>,
// B~<n>, C~<n>, D~<n>, E~6-8, F~4, G~2. Generators are named s1..s<rank>.
CoxeterSystem builtin_system(std::string_view name);

// A fixed list of catalog members covering every family, used for sweeps.
std::vector<std::string> catalog_sample();
// The affine members of catalog_sample().
std::vector<std::string> affine_catalog_sample();

// Connected components of the Coxeter graph on J (edges where m >= 3),
// each component listed once, ordered by smallest member.
std::vector<Subset> irreducible_components(const CoxeterSystem& sys, Subset J);

}  // namespace coxgenus
