#include "coxgenus/artin_chain.hpp"

#include <algorithm>
#include <numeric>

#include "coxgenus/errors.hpp"

namespace coxgenus {
namespace {

IntPoly reduce_mod(const IntPoly& p, const IntPoly& annihilator) {
  return divide_monic(p, annihilator).remainder;
}

}  // namespace

ArtinComplex build_artin_complex(const NerveComplex& K) {
  ArtinComplex C(K);
  const auto& sys = K.system();
  for (int k = 0; k <= K.vd(); ++k) {
    std::vector<IntPoly> w;
    for (Subset J : K.simplices(k)) w.push_back(poincare_polynomial(sys, J));
    C.weights_.push_back(std::move(w));
  }
  for (int k = 1; k <= K.vd(); ++k) {
    const auto& cols = K.simplices(k);
    PolyMatrix d(K.simplices(k - 1).size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (int tau : cols[c].members()) {
        const std::size_t r = K.index_of(cols[c].without(tau));
        IntPoly ratio = exact_div(C.weights_[k][c], C.weights_[k - 1][r]);
        d(r, c) = incidence(cols[c], tau) == 1 ? ratio : -ratio;
      }
    }
    C.boundaries_.push_back(std::move(d));
  }
  return C;
}

std::vector<int> ArtinComplex::chain_condition_failures() const {
  std::vector<int> out;
  for (int k = 2; k <= top_degree(); ++k) {
    if (!(boundary(k - 1) * boundary(k)).is_zero()) out.push_back(k);
  }
  return out;
}

SpecializedComplex specialize(const ArtinComplex& C, const Integer& c) {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;
  for (int k = 0; k <= C.top_degree(); ++k) {
    dims.push_back(C.weights(k).size());
    if (k == 0) continue;
    const auto& d = C.boundary(k);
    IntMatrix m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) m(i, j) = eval_at(d(i, j), c);
    }
    boundaries.push_back(std::move(m));
  }
  return {c, ChainComplex(std::move(dims), std::move(boundaries))};
}

bool is_chain_map(const ArtinComplex& C, const DeltaMap& delta) {
  const auto& K = C.nerve();
  for (int k = 1; k <= C.top_degree(); ++k) {
    const IntMatrix d0 = boundary_matrix_D0(K, k);
    const auto& d = C.boundary(k);
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        // (d0 Delta)(i,j) = d0(i,j) W_J ; (Delta d)(i,j) = W_I d(i,j)
        const IntPoly lhs = IntPoly(d0(i, j)) * delta.diagonal[k][j];
        const IntPoly rhs = delta.diagonal[k - 1][i] * d(i, j);
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

DeltaMap delta_map(const ArtinComplex& C) {
  DeltaMap delta;
  for (int k = 0; k <= C.top_degree(); ++k) delta.diagonal.push_back(C.weights(k));
  if (!is_chain_map(C, delta)) throw InternalError("Delta is not a chain map");
  return delta;
}

bool formal_boundary_holds(const ArtinComplex& C) {
  // [I:J] (W_J/W_I) (1/W_J) == [I:J] (1/W_I)  <=>  entry * W_I == [I:J] * W_J
  const auto& K = C.nerve();
  for (int k = 1; k <= C.top_degree(); ++k) {
    const auto& d = C.boundary(k);
    const auto& cols = K.simplices(k);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int tau : cols[j].members()) {
        const std::size_t i = K.index_of(cols[j].without(tau));
        const IntPoly lhs = d(i, j) * C.weights(k - 1)[i];
        const IntPoly rhs = IntPoly(incidence(cols[j], tau)) * C.weights(k)[j];
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<IntPoly>> solve_delta(const DeltaMap& delta, int k,
                                                const std::vector<IntPoly>& v) {
  const auto& diag = delta.diagonal.at(k);
  if (v.size() != diag.size()) throw std::invalid_argument("vector size does not match degree");
  std::vector<IntPoly> x;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [q, r] = divide_monic(v[i], diag[i]);
    if (!r.is_zero()) return std::nullopt;
    x.push_back(std::move(q));
  }
  return x;
}

QuotientComplexL quotient_L(const ArtinComplex& C) {
  QuotientComplexL L;
  const auto& K = C.nerve();
  for (int k = 0; k <= C.top_degree(); ++k) L.annihilators.push_back(C.weights(k));
  for (int k = 1; k <= C.top_degree(); ++k) {
    const IntMatrix d0 = boundary_matrix_D0(K, k);
    PolyMatrix d(d0.rows(), d0.cols());
    for (std::size_t i = 0; i < d0.rows(); ++i) {
      for (std::size_t j = 0; j < d0.cols(); ++j)
        d(i, j) = reduce_mod(IntPoly(d0(i, j)), L.annihilators[k - 1][i]);
    }
    L.boundaries.push_back(std::move(d));
  }
  return L;
}

std::vector<IntPoly> project_to_L(const QuotientComplexL& L, int k, const std::vector<IntPoly>& v) {
  const auto& ann = L.annihilators.at(k);
  std::vector<IntPoly> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(reduce_mod(v[i], ann[i]));
  return out;
}

bool l_chain_condition_holds(const QuotientComplexL& L) {
  for (std::size_t k = 2; k <= L.boundaries.size(); ++k) {
    const PolyMatrix prod = L.boundaries[k - 2] * L.boundaries[k - 1];
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        if (!reduce_mod(prod(i, j), L.annihilators[k - 2][i]).is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<DegreeExactness> certify_short_exact(const ArtinComplex& C, const DeltaMap& delta,
                                                 const QuotientComplexL& L) {
  const auto& K = C.nerve();
  std::vector<DegreeExactness> out;
  for (int k = 0; k <= C.top_degree(); ++k) {
    DegreeExactness e;
    e.degree = k;
    const auto& diag = delta.diagonal[k];
    const std::size_t n = diag.size();

    e.delta_injective = std::all_of(diag.begin(), diag.end(),
                                    [](const IntPoly& p) { return !p.is_zero(); });

    e.delta_chain_map = true;
    if (k >= 1) {
      const IntMatrix d0 = boundary_matrix_D0(K, k);
      const auto& d = C.boundary(k);
      for (std::size_t i = 0; i < d.rows() && e.delta_chain_map; ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
          if (!(IntPoly(d0(i, j)) * diag[j] == delta.diagonal[k - 1][i] * d(i, j))) {
            e.delta_chain_map = false;
            break;
          }
        }
      }
    }

    // pi(e0_J) is the generator e_J-bar itself.
    e.pi_surjective = true;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<IntPoly> unit(n);
      unit[j] = 1;
      const auto image = project_to_L(L, k, unit);
      for (std::size_t i = 0; i < n; ++i) {
        const IntPoly want = i == j ? reduce_mod(IntPoly(1), L.annihilators[k][i]) : IntPoly();
        if (!(image[i] == want)) e.pi_surjective = false;
      }
    }

    e.pi_chain_map = true;
    if (k >= 1) {
      const IntMatrix d0 = boundary_matrix_D0(K, k);
      for (std::size_t j = 0; j < n && e.pi_chain_map; ++j) {
        std::vector<IntPoly> col(d0.rows());
        for (std::size_t i = 0; i < d0.rows(); ++i) col[i] = IntPoly(d0(i, j));
        const auto lhs = project_to_L(L, k - 1, col);
        for (std::size_t i = 0; i < d0.rows(); ++i) {
          if (!(lhs[i] == L.boundaries[k - 1](i, j))) e.pi_chain_map = false;
        }
      }
    }

    // Delta(e_J) = W_J e0_J generates ker pi; each must project to zero and
    // be recovered from its Delta-preimage.
    e.pi_delta_zero = true;
    e.kernel_in_image = true;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<IntPoly> image(n);
      image[j] = diag[j];
      const auto projected = project_to_L(L, k, image);
      for (const auto& p : projected) {
        if (!p.is_zero()) e.pi_delta_zero = false;
      }
      const auto pre = solve_delta(delta, k, image);
      if (!pre) {
        e.kernel_in_image = false;
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!((*pre)[i] * diag[i] == image[i])) e.kernel_in_image = false;
      }
    }
    out.push_back(e);
  }
  return out;
}

FreePartWitness free_part_witness(const ArtinComplex& C, int k, const std::vector<Integer>& d0_cycle) {
  FreePartWitness w;
  w.degree = k;
  w.d0_cycle = d0_cycle;
  const auto& weights = C.weights(k);
  if (d0_cycle.size() != weights.size()) throw std::invalid_argument("cycle has wrong length");

  std::vector<Integer> orders;
  w.lcm = 1;
  for (const auto& p : weights) {
    orders.push_back(eval_at(p, 1));
    w.lcm = lcm(w.lcm, orders.back());
  }
  for (std::size_t j = 0; j < d0_cycle.size(); ++j) w.lifted.push_back(d0_cycle[j] * (w.lcm / orders[j]));

  auto apply = [](const IntMatrix& m, const std::vector<Integer>& v) {
    std::vector<Integer> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    }
    return out;
  };
  auto all_zero = [](const std::vector<Integer>& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
  };

  const SpecializedComplex at_one = specialize(C, 1);
  if (k >= 1) {
    w.d0_is_cycle = all_zero(apply(boundary_matrix_D0(C.nerve(), k), d0_cycle));
    w.lifted_is_cycle = all_zero(apply(at_one.complex.boundary(k), w.lifted));
  } else {
    w.d0_is_cycle = w.lifted_is_cycle = true;
  }
  w.delta_recovers = true;
  for (std::size_t j = 0; j < d0_cycle.size(); ++j) {
    if (w.lifted[j] * orders[j] != w.lcm * d0_cycle[j]) w.delta_recovers = false;
  }
  return w;
}

nlohmann::json poly_matrix_to_json(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(poly_to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::json int_matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace coxgenus
