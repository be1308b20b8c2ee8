#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "coxgenus/integer.hpp"
#include "coxgenus/matrix.hpp"

namespace coxgenus {

class NerveComplex;

struct SmithForm {
  std::vector<Integer> divisors;  // positive, each dividing the next
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

// Columns form a Z-basis of {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Free Z-complex C_0 <- C_1 <- ... <- C_top. boundary(k) maps C_k to
// C_{k-1}: rows index C_{k-1}, columns index C_k.
class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[k-1] is d_k for k = 1..dims.size()-1.
  ChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries);

  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int k) const;
  // Empty-dimension zero matrix outside 1..top_degree.
  IntMatrix boundary(int k) const;

  // Degrees k with d_{k-1} d_k != 0.
  std::vector<int> chain_condition_failures() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> boundaries_;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

nlohmann::json homology_to_json(const HomologyGroup& h);
HomologyGroup homology_from_json(const nlohmann::json& j);

// H_k = ker d_k / im d_{k+1}. Throws ChainConditionError if d_k d_{k+1} != 0.
HomologyGroup homology_of_complex(const ChainComplex& complex, int k);
std::vector<HomologyGroup> homology_table(const ChainComplex& complex);

// Largest degree with nonzero integral (hvd) or rational (rhvd) homology
// of D^0; nullopt when every group vanishes.
std::optional<int> hvd(const NerveComplex& nerve);
std::optional<int> rhvd(const NerveComplex& nerve);
std::optional<int> hvd(const std::vector<HomologyGroup>& table);
std::optional<int> rhvd(const std::vector<HomologyGroup>& table);

}  // namespace coxgenus
