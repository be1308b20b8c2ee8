// Independent reference computations for the tests: Coxeter groups through
// the floating-point geometric representation, minors-based determinantal
// divisors, Bareiss rank, and random Coxeter matrices.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/integer.hpp"
#include "coxgenus/matrix.hpp"
#include "coxgenus/subset.hpp"

namespace oracle {

using coxgenus::CoxeterSystem;
using coxgenus::Integer;
using coxgenus::IntMatrix;
using coxgenus::Subset;

// W_J acting on R^J by reflections s(v) = v - 2 B(e_s, v) e_s with
// B(e_s, e_t) = -cos(pi / m(s,t)). Elements are found by BFS over right
// multiplication, so each element's depth is its Coxeter length.
class GeometricGroup {
 public:
  using Mat = std::vector<double>;

  GeometricGroup(const CoxeterSystem& sys, Subset J, std::size_t limit = 30000) {
    gens_ = J.members();
    n_ = gens_.size();
    for (std::size_t a = 0; a < n_; ++a) {
      Mat r = identity();
      for (std::size_t b = 0; b < n_; ++b) {
        const auto m = sys.m(gens_[a], gens_[b]);
        const double bil = a == b ? 1.0
                           : m == coxgenus::kInfinity
                               ? -1.0
                               : -std::cos(std::numbers::pi / static_cast<double>(m));
        // column b of the reflection matrix: e_b - 2 B(e_a, e_b) e_a
        r[a * n_ + b] -= 2.0 * bil;
      }
      reflections_.push_back(std::move(r));
    }
    elements_.push_back(identity());
    lengths_.push_back(0);
    index_.emplace(key(elements_[0]), 0);
    for (std::size_t i = 0; i < elements_.size() && elements_.size() <= limit; ++i) {
      for (std::size_t a = 0; a < n_; ++a) {
        Mat next = mul(elements_[i], reflections_[a]);
        auto k = key(next);
        if (index_.count(k)) continue;
        index_.emplace(std::move(k), elements_.size());
        elements_.push_back(std::move(next));
        lengths_.push_back(lengths_[i] + 1);
      }
    }
    complete_ = elements_.size() <= limit;
  }

  bool complete() const { return complete_; }
  std::size_t order() const { return elements_.size(); }
  unsigned length(std::size_t i) const { return lengths_[i]; }

  std::vector<std::size_t> census() const {
    std::vector<std::size_t> c;
    for (unsigned l : lengths_) {
      if (c.size() <= l) c.resize(l + 1);
      ++c[l];
    }
    return c;
  }

  // Index of the product of ambient generators in `word`.
  std::size_t evaluate(const std::vector<int>& word) const {
    Mat m = identity();
    for (int s : word) m = mul(m, reflections_[local(s)]);
    return index_.at(key(m));
  }

  std::size_t times(std::size_t i, int s) const {
    return index_.at(key(mul(elements_[i], reflections_[local(s)])));
  }

 private:
  Mat identity() const {
    Mat m(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1.0;
    return m;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat c(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
    return c;
  }
  static std::vector<std::int64_t> key(const Mat& m) {
    std::vector<std::int64_t> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = std::llround(m[i] * 1e6);
    return k;
  }
  std::size_t local(int s) const {
    for (std::size_t a = 0; a < n_; ++a)
      if (gens_[a] == s) return a;
    throw std::out_of_range("generator outside J");
  }

  std::vector<int> gens_;
  std::size_t n_ = 0;
  std::vector<Mat> reflections_;
  std::vector<Mat> elements_;
  std::vector<unsigned> lengths_;
  std::map<std::vector<std::int64_t>, std::size_t> index_;
  bool complete_ = false;
};

// Fraction-free Gaussian elimination.
inline std::size_t bareiss_rank(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(rank, j), a(p, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(rank, c) * a(i, j) - a(i, c) * a(rank, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

inline Integer determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_k = gcd of all k x k minors; the invariant factors are d_k / d_{k-1}.
inline std::vector<Integer> determinantal_divisors(const IntMatrix& a) {
  std::vector<Integer> out;
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(a.rows(), k, 0, cur, rs);
    combinations(a.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(determinant(m)).get_mpz_t());
      }
    }
    if (g == 0) break;
    out.push_back(g);
  }
  return out;
}

// Symmetric matrix with entries drawn from {2,3,4,5,inf}.
inline CoxeterSystem random_system(std::mt19937& rng, int max_rank = 5) {
  std::uniform_int_distribution<int> rank_dist(1, max_rank);
  std::uniform_int_distribution<int> entry_dist(0, 4);
  const int n = rank_dist(rng);
  static constexpr coxgenus::CoxeterEntry kChoices[] = {2, 3, 4, 5, coxgenus::kInfinity};
  std::vector<std::vector<coxgenus::CoxeterEntry>> m(n, std::vector<coxgenus::CoxeterEntry>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = kChoices[entry_dist(rng)];
  std::vector<std::string> gens;
  for (int i = 0; i < n; ++i) gens.push_back("g" + std::to_string(i));
  return CoxeterSystem(std::move(gens), std::move(m), "random");
}

}  // namespace oracle
