#include "coxgenus/homology.hpp"

#include <algorithm>
#include <utility>

#include "coxgenus/errors.hpp"
#include "coxgenus/nerve.hpp"
#include "coxgenus/poly.hpp"

namespace coxgenus {
namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j, from column `from` on.
void sub_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q, std::size_t from) {
  for (std::size_t c = from; c < a.cols(); ++c) {
    if (a(j, c) != 0) a(i, c) -= q * a(j, c);
  }
}

void sub_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q, std::size_t from) {
  for (std::size_t r = from; r < a.rows(); ++r) {
    if (a(r, j) != 0) a(r, i) -= q * a(r, j);
  }
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  SmithForm out;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols, pivot_rows;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot; a unit
    // ends the search.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) != 0 && (pi == rows || cmpabs(a(i, j), a(pi, pj)) < 0)) {
          pi = i;
          pj = j;
          if (cmpabs(a(i, j), Integer(1)) == 0) break;
        }
      }
      if (pi != rows && cmpabs(a(pi, pj), Integer(1)) == 0) break;
    }
    if (pi == rows) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    while (true) {
      pivot_cols.clear();
      for (std::size_t c = t; c < cols; ++c)
        if (a(t, c) != 0) pivot_cols.push_back(c);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        for (std::size_t c : pivot_cols) a(i, c) -= q * a(t, c);
      }
      pivot_rows.clear();
      for (std::size_t r = t; r < rows; ++r)
        if (a(r, t) != 0) pivot_rows.push_back(r);
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        for (std::size_t r : pivot_rows) a(r, j) -= q * a(r, t);
      }
      // Remainders left in row or column t are smaller than the pivot.
      std::size_t best_i = t, best_j = t;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) != 0 && cmpabs(a(i, t), a(best_i, best_j)) < 0) {
          best_i = i;
          best_j = t;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) != 0 && cmpabs(a(t, j), a(best_i, best_j)) < 0) {
          best_i = t;
          best_j = j;
        }
      }
      if (best_i != t || best_j != t) {
        swap_rows(a, t, best_i);
        swap_cols(a, t, best_j);
        continue;
      }
      bool clear = true;
      for (std::size_t i = t + 1; i < rows && clear; ++i) clear = a(i, t) == 0;
      for (std::size_t j = t + 1; j < cols && clear; ++j) clear = a(t, j) == 0;
      if (!clear) continue;
      if (cmpabs(a(t, t), Integer(1)) == 0) break;

      // Enforce the divisibility chain.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            sub_row(a, t, i, Integer(-1), t);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    out.divisors.push_back(abs(a(t, t)));
  }
  out.rank = out.divisors.size();
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = a.cols();
  IntMatrix v = IntMatrix::identity(n);
  auto col_op = [&](std::size_t j, std::size_t p, const Integer& q) {
    sub_col(a, j, p, q, 0);
    sub_col(v, j, p, q, 0);
  };
  std::size_t piv = 0;
  for (std::size_t r = 0; r < a.rows() && piv < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = piv; j < n; ++j) {
        if (a(r, j) != 0 && (best == n || cmpabs(a(r, j), a(r, best)) < 0)) best = j;
      }
      if (best == n) break;
      swap_cols(a, piv, best);
      swap_cols(v, piv, best);
      bool single = true;
      for (std::size_t j = piv + 1; j < n; ++j) {
        if (a(r, j) == 0) continue;
        col_op(j, piv, Integer(a(r, j) / a(r, piv)));
        if (a(r, j) != 0) single = false;
      }
      if (single) {
        ++piv;
        break;
      }
    }
  }
  IntMatrix kernel(n, n - piv);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = piv; j < n; ++j) kernel(i, j - piv) = v(i, j);
  }
  return kernel;
}

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw std::invalid_argument("chain complex needs degree 0");
  if (boundaries_.size() + 1 != dims_.size())
    throw std::invalid_argument("need one boundary matrix per positive degree");
  for (std::size_t k = 1; k < dims_.size(); ++k) {
    const auto& d = boundaries_[k - 1];
    if (d.rows() != dims_[k - 1] || d.cols() != dims_[k])
      throw std::invalid_argument("boundary " + std::to_string(k) + " has wrong shape");
  }
}

std::size_t ChainComplex::dim(int k) const {
  if (k < 0 || k > top_degree()) return 0;
  return dims_[k];
}

IntMatrix ChainComplex::boundary(int k) const {
  if (k >= 1 && k <= top_degree()) return boundaries_[k - 1];
  return IntMatrix(dim(k - 1), dim(k));
}

std::vector<int> ChainComplex::chain_condition_failures() const {
  std::vector<int> out;
  for (int k = 2; k <= top_degree(); ++k) {
    if (!(boundaries_[k - 2] * boundaries_[k - 1]).is_zero()) out.push_back(k);
  }
  return out;
}

nlohmann::json homology_to_json(const HomologyGroup& h) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& d : h.torsion) t.push_back(integer_to_json(d));
  return {{"rank", h.free_rank}, {"torsion", std::move(t)}};
}

HomologyGroup homology_from_json(const nlohmann::json& j) {
  HomologyGroup h;
  h.free_rank = j.at("rank").get<std::size_t>();
  for (const auto& d : j.at("torsion")) h.torsion.push_back(integer_from_json(d));
  return h;
}

namespace {

HomologyGroup assemble(std::size_t dim, const SmithForm& in, const SmithForm& out) {
  HomologyGroup h;
  h.free_rank = dim - in.rank - out.rank;
  for (const auto& d : out.divisors) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

void require_chain(const ChainComplex& c, int k) {
  // d_k o d_{k+1}
  if (k < 1 || k + 1 > c.top_degree()) return;
  if (!(c.boundary(k) * c.boundary(k + 1)).is_zero())
    throw ChainConditionError("d_" + std::to_string(k) + " d_" + std::to_string(k + 1) + " != 0");
}

}  // namespace

HomologyGroup homology_of_complex(const ChainComplex& complex, int k) {
  require_chain(complex, k);
  return assemble(complex.dim(k), smith_normal_form(complex.boundary(k)),
                  smith_normal_form(complex.boundary(k + 1)));
}

std::vector<HomologyGroup> homology_table(const ChainComplex& complex) {
  std::vector<SmithForm> snf;
  for (int k = 0; k <= complex.top_degree() + 1; ++k) {
    if (k >= 1) require_chain(complex, k - 1);
    snf.push_back(smith_normal_form(complex.boundary(k)));
  }
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= complex.top_degree(); ++k)
    out.push_back(assemble(complex.dim(k), snf[k], snf[k + 1]));
  return out;
}

std::optional<int> hvd(const std::vector<HomologyGroup>& table) {
  for (int k = static_cast<int>(table.size()) - 1; k >= 0; --k) {
    if (!table[k].is_trivial()) return k;
  }
  return std::nullopt;
}

std::optional<int> rhvd(const std::vector<HomologyGroup>& table) {
  for (int k = static_cast<int>(table.size()) - 1; k >= 0; --k) {
    if (table[k].free_rank > 0) return k;
  }
  return std::nullopt;
}

std::optional<int> hvd(const NerveComplex& nerve) { return hvd(homology_table(d0_complex(nerve))); }
std::optional<int> rhvd(const NerveComplex& nerve) {
  return rhvd(homology_table(d0_complex(nerve)));
}

}  // namespace coxgenus
