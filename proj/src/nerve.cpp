#include "coxgenus/nerve.hpp"

#include <stdexcept>

#include "coxgenus/classifier.hpp"

namespace coxgenus {

const std::vector<Subset>& NerveComplex::simplices(int k) const {
  static const std::vector<Subset> kEmpty;
  if (k < 0 || k > vd()) return kEmpty;
  return layers_[k];
}

std::size_t NerveComplex::size() const {
  std::size_t n = 0;
  for (const auto& layer : layers_) n += layer.size();
  return n;
}

NerveComplex build_nerve(const CoxeterSystem& sys) {
  NerveComplex K(sys);
  K.layers_.push_back({Subset{}});
  K.index_[0] = 0;
  // Grow J by generators above max(J); a candidate is classified only when
  // all of its facets are already known to be finite.
  while (true) {
    const auto& prev = K.layers_.back();
    std::vector<Subset> next;
    for (Subset J : prev) {
      const int first = J.empty() ? 0 : J.max_member() + 1;
      for (int s = first; s < sys.rank(); ++s) {
        const Subset candidate = J.with(s);
        bool facets_finite = true;
        for (int t : J.members()) {
          if (!K.contains(candidate.without(t))) {
            facets_finite = false;
            break;
          }
        }
        if (facets_finite && is_finite_type(sys, candidate)) next.push_back(candidate);
      }
    }
    if (next.empty()) break;
    for (std::size_t i = 0; i < next.size(); ++i) K.index_[next[i].bits()] = i;
    K.layers_.push_back(std::move(next));
  }

  for (int k = 0; k <= K.vd(); ++k) {
    for (Subset J : K.layers_[k]) {
      bool maximal = true;
      for (int s = 0; s < sys.rank() && maximal; ++s) {
        if (!J.contains(s) && K.contains(J.with(s))) maximal = false;
      }
      if (maximal) K.maximal_.push_back(J);
    }
  }
  return K;
}

IntMatrix boundary_matrix_D0(const NerveComplex& K, int k) {
  if (k < 1 || k > K.vd()) throw std::out_of_range("D0 boundary degree out of range");
  const auto& rows = K.simplices(k - 1);
  const auto& cols = K.simplices(k);
  IntMatrix d(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int tau : cols[c].members()) {
      d(K.index_of(cols[c].without(tau)), c) = incidence(cols[c], tau);
    }
  }
  return d;
}

ChainComplex d0_complex(const NerveComplex& K) {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;
  for (int k = 0; k <= K.vd(); ++k) {
    dims.push_back(K.simplices(k).size());
    if (k >= 1) boundaries.push_back(boundary_matrix_D0(K, k));
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

}  // namespace coxgenus
