#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "divpoly/rational.hpp"

namespace divpoly {

// Dense row-major matrix over the rationals. Only what the algebra layer
// needs: exact elimination, determinants, solving and kernels.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& x);

std::size_t rank(Matrix a);
Rational determinant(Matrix a);

// Unique solution of a·x = b for square invertible a; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

// Basis of {x : a·x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rational>> kernel(Matrix a);

}  // namespace divpoly
