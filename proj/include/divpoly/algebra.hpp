#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "divpoly/linalg.hpp"
#include "divpoly/rational.hpp"

namespace divpoly {

// c[s][t][u]: v_s * v_t = sum_u c[s][t][u] v_u, all indices 0-based.
using StructureConstants = std::vector<std::vector<std::vector<Rational>>>;

struct AlgebraElement {
  std::vector<Rational> coords;

  bool is_zero() const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a);
AlgebraElement operator*(const Rational& q, const AlgebraElement& a);
AlgebraElement& operator+=(AlgebraElement& a, const AlgebraElement& b);

// A finite-dimensional algebra over Q with v_1 as unit, associative, with
// one-dimensional center and an invertible lemma_matrix. Instances only come
// out of make_algebra, so holding one means the checks passed.
class AlgebraSpec {
 public:
  struct Product {
    std::size_t index;
    Rational coef;
  };

  std::size_t dim() const { return m_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& constants() const { return c_; }
  const Rational& constant(std::size_t s, std::size_t t, std::size_t u) const { return c_[s][t][u]; }

  // Nonzero terms of v_s * v_t.
  const std::vector<Product>& product(std::size_t s, std::size_t t) const { return sparse_[s * m_ + t]; }

  // True when the structure constants are those of (-1,-1 | Q) on 1,i,j,k.
  bool is_quaternion() const { return quaternion_; }

  AlgebraElement zero() const;
  AlgebraElement one() const { return basis(0); }
  AlgebraElement basis(std::size_t s) const;
  AlgebraElement scalar(const Rational& q) const;

  // Equal constants; labels are presentation only.
  bool same_algebra(const AlgebraSpec& other) const { return m_ == other.m_ && c_ == other.c_; }

 private:
  friend std::shared_ptr<const AlgebraSpec> make_algebra(std::size_t, StructureConstants,
                                                         std::vector<std::string>);
  AlgebraSpec(std::size_t m, StructureConstants c, std::vector<std::string> labels);

  std::size_t m_;
  StructureConstants c_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Product>> sparse_;
  bool quaternion_ = false;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

// Validates eagerly, in this order: table shape (DimensionMismatch), m > 1
// (DimensionOne), unit (UnitMissing), associativity (NotAssociative),
// one-dimensional center (NotCentral), sandwich-map matrix (LemmaMatrixSingular).
AlgebraPtr make_algebra(std::size_t m, StructureConstants constants, std::vector<std::string> labels);

// Rational quaternions, basis 1, i, j, k. Shared instance.
AlgebraPtr quaternion_algebra();

StructureConstants quaternion_constants();

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b, const AlgebraSpec& spec);

// Two-sided inverse through the left-multiplication matrix of a.
AlgebraElement inverse(const AlgebraElement& a, const AlgebraSpec& spec);

// a + bi + cj + dk -> a - bi - cj - dk. Quaternion ambient only.
AlgebraElement conjugate(const AlgebraElement& a, const AlgebraSpec& spec);

// Column (s, t) (index s*m + t) is the vectorized map x -> v_s x v_t, with
// the coordinate u of the image of v_w stored at row u*m + w.
Matrix lemma_matrix(std::size_t m, const StructureConstants& constants);
inline Matrix lemma_matrix(const AlgebraSpec& spec) { return lemma_matrix(spec.dim(), spec.constants()); }

// Dimension of {x : v_s x = x v_s for all s}.
std::size_t center_dimension(std::size_t m, const StructureConstants& constants);

// b[i][s][t] with  sum_{s,t} b[i][s][t] v_s x v_t = x_i v_1  for every x.
class CoordTable {
 public:
  explicit CoordTable(std::size_t m) : m_(m), b_(m * m * m) {}

  std::size_t dim() const { return m_; }
  Rational& operator()(std::size_t i, std::size_t s, std::size_t t) { return b_[(i * m_ + s) * m_ + t]; }
  const Rational& operator()(std::size_t i, std::size_t s, std::size_t t) const {
    return b_[(i * m_ + s) * m_ + t];
  }

  friend bool operator==(const CoordTable&, const CoordTable&) = default;

 private:
  std::size_t m_;
  std::vector<Rational> b_;
};

CoordTable coordinate_functionals(const AlgebraSpec& spec);

// sum_{s,t} b[i][s][t] v_s x v_t, evaluated directly in the algebra.
AlgebraElement apply_functional(const CoordTable& table, std::size_t i, const AlgebraElement& x,
                                const AlgebraSpec& spec);

}  // namespace divpoly
