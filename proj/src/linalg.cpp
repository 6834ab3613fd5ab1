#include "divpoly/linalg.hpp"

#include <utility>

#include "divpoly/error.hpp"

namespace divpoly {

Matrix Matrix::identity(std::size_t n) {
  Matrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& x) {
  if (x.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  std::vector<Rational> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!is_zero(a(r, c)) && !is_zero(x[c])) y[r] += a(r, c) * x[c];
  return y;
}

namespace {

// Reduced row echelon form in place. Returns the pivot column of each pivot
// row and the sign flips from row swaps via `swaps`.
std::vector<std::size_t> rref(Matrix& a, std::size_t* swaps = nullptr, Rational* pivot_product = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
      if (swaps) ++*swaps;
    }
    Rational inv = 1 / a(row, col);
    if (pivot_product) *pivot_product *= a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!is_zero(a(row, c))) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix a) { return rref(a).size(); }

Rational determinant(Matrix a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  std::size_t swaps = 0;
  Rational prod = 1;
  auto pivots = rref(a, &swaps, &prod);
  if (pivots.size() < a.rows()) return 0;
  return swaps % 2 ? Rational(-prod) : prod;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error(ErrorKind::DimensionMismatch, "solve expects a square system");
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = std::move(a(r, c));
    aug(r, n) = std::move(b[r]);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

std::vector<std::vector<Rational>> kernel(Matrix a) {
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace divpoly
