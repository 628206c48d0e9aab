#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "stabsel/error.hpp"

namespace stabsel {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void set_column(std::size_t j, const std::vector<double>& values) {
    if (values.size() != rows_) throw Error("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
  }

  Matrix select_rows(const std::vector<std::size_t>& indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      auto src = row(indices[i]);
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = src[j];
    }
    return out;
  }

  Matrix select_columns(const std::vector<std::size_t>& indices) const {
    Matrix out(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = (*this)(i, indices[j]);
    return out;
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Per-column mean of a matrix.
inline std::vector<double> column_means(const Matrix& m) {
  std::vector<double> out(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j);
  for (double& v : out) v /= static_cast<double>(m.rows());
  return out;
}

/// Per-column population standard deviation.
inline std::vector<double> column_stddevs(const Matrix& m) {
  std::vector<double> means = column_means(m);
  std::vector<double> out(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double d = m(i, j) - means[j];
      out[j] += d * d;
    }
  for (double& v : out) v = std::sqrt(v / static_cast<double>(m.rows()));
  return out;
}

}  // namespace stabsel
