#pragma once

#include <optional>
#include <vector>

#include "coxgenus/homology.hpp"
#include "coxgenus/matrix.hpp"
#include "coxgenus/nerve.hpp"
#include "coxgenus/poly.hpp"

namespace coxgenus {

using PolyMatrix = Matrix<IntPoly>;

// The rank-1 specialization g_s -> -q of the Artin group complex:
// basis e_J for J in K(W), d(e_J) = sum [I:J] W_J(q)/W_I(q) e_I.
class ArtinComplex {
 public:
  const NerveComplex& nerve() const { return nerve_; }
  int top_degree() const { return nerve_.vd(); }
  // d_k for 1 <= k <= top_degree().
  const PolyMatrix& boundary(int k) const { return boundaries_.at(k - 1); }
  // W_J(q) for the simplices of layer k, in layer order.
  const std::vector<IntPoly>& weights(int k) const { return weights_.at(k); }

  std::vector<int> chain_condition_failures() const;

 private:
  friend ArtinComplex build_artin_complex(const NerveComplex&);
  explicit ArtinComplex(NerveComplex nerve) : nerve_(std::move(nerve)) {}

  NerveComplex nerve_;
  std::vector<std::vector<IntPoly>> weights_;
  std::vector<PolyMatrix> boundaries_;
};

// Propagates NotDivisible, which cannot happen for nested parabolics.
ArtinComplex build_artin_complex(const NerveComplex& K);

struct SpecializedComplex {
  Integer point;
  ChainComplex complex;
};

// Entrywise evaluation at q = c. At c = 1 this is the sign representation
// Z[-1]; at c = -1 it is the trivial representation.
SpecializedComplex specialize(const ArtinComplex& C, const Integer& c);

// Delta: D_* -> D^0_*, e_J -> W_J(q) e^0_J.
struct DeltaMap {
  std::vector<std::vector<IntPoly>> diagonal;  // per degree
};

// Checks d^0 Delta = Delta d in every degree; throws InternalError if not.
DeltaMap delta_map(const ArtinComplex& C);
bool is_chain_map(const ArtinComplex& C, const DeltaMap& delta);

// d(e_J / W_J) = sum [I:J] e_I / W_I, checked by cross-multiplying.
bool formal_boundary_holds(const ArtinComplex& C);

// Preimage x with Delta x = v in degree k, if one exists.
std::optional<std::vector<IntPoly>> solve_delta(const DeltaMap& delta, int k,
                                                const std::vector<IntPoly>& v);

// L_k = sum R/(W_J(q)) e_J with the boundary induced from D^0.
struct QuotientComplexL {
  std::vector<std::vector<IntPoly>> annihilators;  // per degree
  std::vector<PolyMatrix> boundaries;  // [k-1]: L_k -> L_{k-1}, reduced mod target annihilators
};

QuotientComplexL quotient_L(const ArtinComplex& C);

// pi(v) for v in D^0_k: coordinates reduced mod W_J(q).
std::vector<IntPoly> project_to_L(const QuotientComplexL& L, int k, const std::vector<IntPoly>& v);

// d_L d_L == 0 modulo the annihilators.
bool l_chain_condition_holds(const QuotientComplexL& L);

struct DegreeExactness {
  int degree = 0;
  bool delta_injective = false;    // nonzero diagonal
  bool delta_chain_map = false;    // d^0 Delta = Delta d into this degree
  bool pi_surjective = false;      // each e_J-bar has the preimage e^0_J
  bool pi_chain_map = false;       // pi d^0 = d_L pi
  bool pi_delta_zero = false;      // pi o Delta = 0
  bool kernel_in_image = false;    // generators of ker pi solved through Delta

  bool ok() const {
    return delta_injective && delta_chain_map && pi_surjective && pi_chain_map &&
           pi_delta_zero && kernel_in_image;
  }
};

// Degreewise certificate for 0 -> D_* -> D^0_* -> L_* -> 0.
std::vector<DegreeExactness> certify_short_exact(const ArtinComplex& C, const DeltaMap& delta,
                                                 const QuotientComplexL& L);

// Lift of a D^0 cycle z0 of degree k to the q = 1 complex:
// z = sum eps_J * (mu / W_J(1)) e_J with mu = lcm of the W_J(1).
struct FreePartWitness {
  int degree = 0;
  Integer lcm;
  std::vector<Integer> d0_cycle;
  std::vector<Integer> lifted;
  bool d0_is_cycle = false;
  bool lifted_is_cycle = false;  // in the q = 1 specialization
  bool delta_recovers = false;   // Delta(z) = mu z0 at q = 1
};

FreePartWitness free_part_witness(const ArtinComplex& C, int k, const std::vector<Integer>& d0_cycle);

nlohmann::json poly_matrix_to_json(const PolyMatrix& m);
nlohmann::json int_matrix_to_json(const IntMatrix& m);

}  // namespace coxgenus
