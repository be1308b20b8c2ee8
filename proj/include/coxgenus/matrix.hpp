#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxgenus/errors.hpp"
#include "coxgenus/integer.hpp"

namespace coxgenus {

// About 0.5 GB of small mpz entries.
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 25;

// Dense row-major matrix over a ring whose default value is zero.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (cols != 0 && rows > kMaxDenseEntries / cols)
      throw SizeLimitExceeded(std::to_string(rows) + " x " + std::to_string(cols) +
                              " matrix exceeds the dense limit of " +
                              std::to_string(kMaxDenseEntries) + " entries");
    data_.resize(rows * cols);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!(x == T())) return false;
    }
    return true;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not compose");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!(b(k, j) == T())) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

using IntMatrix = Matrix<Integer>;

}  // namespace coxgenus
