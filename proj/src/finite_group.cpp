#include "coxgenus/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxgenus/classifier.hpp"
#include "coxgenus/errors.hpp"

namespace coxgenus {
namespace {

constexpr int kUndefined = -1;

// HLT coset enumeration with coincidence processing. Every generator is an
// involution, so one column per generator serves as its own inverse and the
// relators s^2 are implicit.
class CosetEnumerator {
 public:
  CosetEnumerator(int ngens, std::vector<std::vector<int>> relators, std::size_t limit)
      : ngens_(ngens), relators_(std::move(relators)), limit_(limit) {
    new_coset();
  }

  // Returns the compacted coset table (live cosets only, coset 0 first).
  std::vector<std::vector<int>> run() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& rel : relators_) {
        if (!alive(c)) break;
        scan_and_fill(static_cast<int>(c), rel);
      }
      for (int g = 0; g < ngens_ && alive(c); ++g) {
        if (table_[c][g] == kUndefined) define(static_cast<int>(c), g);
      }
    }
    std::vector<int> relabel(parent_.size(), kUndefined);
    int next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(c)) relabel[c] = next++;
    }
    std::vector<std::vector<int>> out;
    out.reserve(next);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      std::vector<int> row(ngens_);
      for (int g = 0; g < ngens_; ++g) row[g] = relabel[table_[c][g]];
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    if (parent_.size() >= limit_)
      throw InternalError("coset enumeration exceeded its definition limit");
    int c = static_cast<int>(parent_.size());
    table_.emplace_back(ngens_, kUndefined);
    parent_.push_back(c);
    return c;
  }

  void define(int c, int g) {
    int d = new_coset();
    table_[c][g] = d;
    table_[d][g] = c;
  }

  void scan_and_fill(int c, const std::vector<int>& rel) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(rel.size()) - 1;
    while (true) {
      while (i <= j && table_[f][rel[i]] != kUndefined) f = table_[f][rel[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][rel[j]] != kUndefined) b = table_[b][rel[j--]];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][rel[i]] = b;
        table_[b][rel[i]] = f;
        return;
      }
      define(f, rel[i]);
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int dead = queue[q];
      for (int g = 0; g < ngens_; ++g) {
        const int target = table_[dead][g];
        if (target == kUndefined) continue;
        if (table_[target][g] == dead) table_[target][g] = kUndefined;
        const int mu = rep(dead), nu = rep(target);
        if (table_[mu][g] != kUndefined) {
          merge(nu, table_[mu][g], queue);
        } else if (table_[nu][g] != kUndefined) {
          merge(mu, table_[nu][g], queue);
        } else {
          table_[mu][g] = nu;
          table_[nu][g] = mu;
        }
      }
    }
  }

  int ngens_;
  std::vector<std::vector<int>> relators_;
  std::size_t limit_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

int FiniteGroupTable::local_index(int s) const {
  auto it = std::lower_bound(generators_.begin(), generators_.end(), s);
  if (it == generators_.end() || *it != s)
    throw std::invalid_argument("generator " + std::to_string(s) + " not in the parabolic subset");
  return static_cast<int>(it - generators_.begin());
}

FiniteGroupTable::Element FiniteGroupTable::times_generator(Element w, int s) const {
  return action_[w * generators_.size() + local_index(s)];
}

FiniteGroupTable::Element FiniteGroupTable::evaluate(const Word& word) const {
  Element w = identity();
  for (int s : word.letters) w = times_generator(w, s);
  return w;
}

FiniteGroupTable::Element FiniteGroupTable::multiply(Element a, Element b) const {
  for (int s : normal_forms_[b].letters) a = times_generator(a, s);
  return a;
}

FiniteGroupTable::Element FiniteGroupTable::inverse(Element w) const {
  const auto& letters = normal_forms_[w].letters;
  Element out = identity();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = times_generator(out, *it);
  return out;
}

std::optional<int> FiniteGroupTable::as_generator(Element w) const {
  if (lengths_[w] != 1) return std::nullopt;
  return normal_forms_[w].letters.front();
}

std::vector<std::size_t> FiniteGroupTable::length_census() const {
  std::vector<std::size_t> census(lengths_.empty() ? 0 : lengths_.back() + 1, 0);
  for (unsigned l : lengths_) ++census[l];
  return census;
}

FiniteGroupTable materialize_group(const CoxeterSystem& sys, Subset J, std::size_t cap) {
  const ClassificationResult cls = classify(sys, J);
  if (!cls.finite) throw NotFiniteType("W_" + sys.describe(J) + " is infinite");
  if (cls.order > cap) throw CapExceeded(sys.describe(J), to_string(cls.order));
  const std::size_t expected = cls.order.get_ui();

  FiniteGroupTable table;
  table.subset_ = J;
  table.generators_ = J.members();
  const int k = static_cast<int>(table.generators_.size());

  std::vector<std::vector<int>> relators;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const CoxeterEntry m = sys.m(table.generators_[a], table.generators_[b]);
      std::vector<int> rel;
      for (CoxeterEntry r = 0; r < m; ++r) {
        rel.push_back(a);
        rel.push_back(b);
      }
      relators.push_back(std::move(rel));
    }
  }
  // Longer relators first keeps the HLT definition count down.
  std::stable_sort(relators.begin(), relators.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });

  CosetEnumerator enumerator(k, std::move(relators), 64 * expected + 4096);
  const auto cosets = enumerator.run();
  if (cosets.size() != expected)
    throw InternalError("coset enumeration of W_" + sys.describe(J) + " found " +
                        std::to_string(cosets.size()) + " elements, expected " +
                        std::to_string(expected));

  // Breadth-first search from the identity, generators in increasing order:
  // the first word reaching an element is its ShortLex-least reduced word.
  std::vector<int> order_of(cosets.size(), kUndefined);
  std::vector<int> bfs{0};
  order_of[0] = 0;
  table.normal_forms_.push_back(Word{});
  table.lengths_.push_back(0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int c = bfs[head];
    for (int g = 0; g < k; ++g) {
      const int d = cosets[c][g];
      if (order_of[d] != kUndefined) continue;
      order_of[d] = static_cast<int>(bfs.size());
      bfs.push_back(d);
      Word w = table.normal_forms_[head];
      w.letters.push_back(table.generators_[g]);
      table.normal_forms_.push_back(std::move(w));
      table.lengths_.push_back(table.lengths_[head] + 1);
    }
  }
  table.action_.resize(cosets.size() * k);
  for (std::size_t e = 0; e < bfs.size(); ++e) {
    for (int g = 0; g < k; ++g) table.action_[e * k + g] = order_of[cosets[bfs[e]][g]];
  }
  return table;
}

std::vector<FiniteGroupTable::Element> minimal_coset_representatives(
    const FiniteGroupTable& table, Subset I) {
  if (!I.is_subset_of(table.subset()))
    throw std::invalid_argument("I must be a subset of J");
  const auto gens = I.members();
  std::vector<FiniteGroupTable::Element> out;
  for (FiniteGroupTable::Element w = 0; w < table.order(); ++w) {
    bool minimal = std::all_of(gens.begin(), gens.end(), [&](int s) {
      return table.length(table.times_generator(w, s)) > table.length(w);
    });
    if (minimal) out.push_back(w);
  }
  return out;
}

ArtinWord psi_section(const FiniteGroupTable& table, FiniteGroupTable::Element w) {
  return ArtinWord{table.normal_form(w).letters};
}

}  // namespace coxgenus
