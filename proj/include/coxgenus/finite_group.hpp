#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/subset.hpp"

namespace coxgenus {

inline constexpr std::size_t kDefaultGroupCap = 20000;

// A finite parabolic subgroup W_J as its regular right action on itself.
// Elements are numbered in ShortLex order of their normal forms, so the
// identity is element 0 and lengths are non-decreasing with the index.
class FiniteGroupTable {
 public:
  using Element = std::uint32_t;

  Subset subset() const { return subset_; }
  // Ambient indices of the generators of J, increasing.
  std::span<const int> generators() const { return generators_; }
  std::size_t order() const { return lengths_.size(); }

  Element identity() const { return 0; }
  // w * s for an ambient generator s in J.
  Element times_generator(Element w, int s) const;
  Element multiply(Element a, Element b) const;
  Element inverse(Element w) const;
  Element conjugate(Element beta, Element a) const {  // beta^{-1} a beta
    return multiply(multiply(inverse(beta), a), beta);
  }
  // Evaluates an arbitrary word over J.
  Element evaluate(const Word& w) const;

  // ShortLex-least reduced expression.
  const Word& normal_form(Element w) const { return normal_forms_[w]; }
  unsigned length(Element w) const { return lengths_[w]; }
  Element longest_element() const { return static_cast<Element>(order() - 1); }
  // The ambient generator s if w == s.
  std::optional<int> as_generator(Element w) const;
  Element generator_element(int s) const { return times_generator(identity(), s); }

  // Number of elements of each length.
  std::vector<std::size_t> length_census() const;

 private:
  friend FiniteGroupTable materialize_group(const CoxeterSystem&, Subset, std::size_t);

  int local_index(int s) const;

  Subset subset_;
  std::vector<int> generators_;
  std::vector<Element> action_;  // order x |J|, row-major
  std::vector<Word> normal_forms_;
  std::vector<unsigned> lengths_;
};

// Coset enumeration of <J | (st)^m(s,t)> over the trivial subgroup.
// Throws NotFiniteType when W_J is infinite, CapExceeded when |W_J| > cap.
FiniteGroupTable materialize_group(const CoxeterSystem& sys, Subset J,
                                   std::size_t cap = kDefaultGroupCap);

// W^J_I: elements beta of W_J with l(beta s) > l(beta) for every s in I.
// Throws std::invalid_argument unless I is contained in J.
std::vector<FiniteGroupTable::Element> minimal_coset_representatives(
    const FiniteGroupTable& table, Subset I);

// The section psi: W_J -> G_W, read off the ShortLex reduced expression.
ArtinWord psi_section(const FiniteGroupTable& table, FiniteGroupTable::Element w);

}  // namespace coxgenus
