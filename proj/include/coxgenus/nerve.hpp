#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/homology.hpp"
#include "coxgenus/subset.hpp"

namespace coxgenus {

// K(W): the subsets J of S with W_J finite, graded by cardinality. Layer 0
// is {empty set}; each layer is sorted lexicographically.
class NerveComplex {
 public:
  const CoxeterSystem& system() const { return system_; }
  // Largest cardinality present; equals dim(K) + 1.
  int vd() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<Subset>& simplices(int k) const;
  const std::vector<Subset>& maximal() const { return maximal_; }
  std::size_t size() const;

  bool contains(Subset J) const { return index_.count(J.bits()) != 0; }
  // Position of J within its layer; throws std::out_of_range if absent.
  std::size_t index_of(Subset J) const { return index_.at(J.bits()); }

 private:
  friend NerveComplex build_nerve(const CoxeterSystem&);
  explicit NerveComplex(CoxeterSystem sys) : system_(std::move(sys)) {}

  CoxeterSystem system_;
  std::vector<std::vector<Subset>> layers_;
  std::vector<Subset> maximal_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

NerveComplex build_nerve(const CoxeterSystem& sys);

// [J \ {tau} : J] = (-1)^{#{j in J : j < tau}}.
inline int incidence(Subset J, int tau) { return J.count_below(tau) % 2 == 0 ? 1 : -1; }

// d^0_k from cardinality-k subsets to cardinality-(k-1) subsets.
// Throws std::out_of_range unless 1 <= k <= vd.
IntMatrix boundary_matrix_D0(const NerveComplex& K, int k);

ChainComplex d0_complex(const NerveComplex& K);

inline int vd(const NerveComplex& K) { return K.vd(); }

}  // namespace coxgenus
