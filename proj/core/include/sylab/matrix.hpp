#pragma once

#include <cstddef>
#include <vector>

namespace sylab {

// Row-major dense matrix. Only what the atlas code needs.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  template <typename V>
  std::vector<V> apply(const std::vector<V>& v) const {
    std::vector<V> out(rows_, V(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != 0) out[i] += V((*this)(i, j)) * v[j];
      }
    }
    return out;
  }

  // <v, M w>
  template <typename V>
  V form(const std::vector<V>& v, const std::vector<V>& w) const {
    V total(0);
    auto mw = apply(w);
    for (std::size_t i = 0; i < rows_; ++i) total += v[i] * mw[i];
    return total;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace sylab
