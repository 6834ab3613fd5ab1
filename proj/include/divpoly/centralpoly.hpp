#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "divpoly/algebra.hpp"

namespace divpoly {

// Exponent vector over the central variables y_ij, index (i-1)*m + (j-1).
struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  std::size_t nvars() const { return exps.size(); }
  std::uint64_t degree() const;
  bool is_one() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Degree-reverse-lexicographic with y_11 > y_12 > ... > y_nm.
struct DegRevLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Element of F[y_ij] (the central subring S').
class ScalarPoly {
 public:
  using Terms = std::map<Monomial, Rational, DegRevLex>;

  explicit ScalarPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static ScalarPoly constant(std::size_t nvars, const Rational& q);
  static ScalarPoly variable(std::size_t nvars, std::size_t index);
  static ScalarPoly term(const Monomial& mono, const Rational& coef);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Largest term in DegRevLex; requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  void add_term(const Monomial& mono, const Rational& coef);

  ScalarPoly& operator+=(const ScalarPoly& other);
  ScalarPoly& operator-=(const ScalarPoly& other);

  // this += coef * mono * p
  void add_multiple(const Rational& coef, const Monomial& mono, const ScalarPoly& p);

  Rational eval(const std::vector<Rational>& point) const;

  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
ScalarPoly operator*(const Rational& q, const ScalarPoly& a);

// Element of D_c[y_ij]: algebra coefficients (on the left) times central
// monomials. No stored zero coefficients.
class CentralPoly {
 public:
  using Terms = std::map<Monomial, AlgebraElement, DegRevLex>;

  CentralPoly(AlgebraPtr ambient, std::size_t nvars) : ambient_(std::move(ambient)), nvars_(nvars) {}

  static CentralPoly constant(AlgebraPtr ambient, std::size_t nvars, const AlgebraElement& a);
  // y_{i+1, j+1}
  static CentralPoly variable(AlgebraPtr ambient, std::size_t nvars, std::size_t i, std::size_t j);
  static CentralPoly from_scalar(AlgebraPtr ambient, std::size_t nvars, const ScalarPoly& g);

  const AlgebraPtr& ambient() const { return ambient_; }
  const AlgebraSpec& algebra() const { return *ambient_; }
  // Number of noncommuting variables n; central variables number n*m.
  std::size_t nvars() const { return nvars_; }
  std::size_t ncentral() const { return nvars_ * ambient_->dim(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const AlgebraElement& coef);

  CentralPoly& operator+=(const CentralPoly& other);
  CentralPoly& operator-=(const CentralPoly& other);

  bool compatible(const CentralPoly& other) const;
  friend bool operator==(const CentralPoly& a, const CentralPoly& b);

 private:
  AlgebraPtr ambient_;
  std::size_t nvars_;
  Terms terms_;
};

CentralPoly operator+(const CentralPoly& a, const CentralPoly& b);
CentralPoly operator-(const CentralPoly& a, const CentralPoly& b);
CentralPoly operator*(const CentralPoly& a, const CentralPoly& b);
CentralPoly operator*(const Rational& q, const CentralPoly& a);

CentralPoly cp_add(const CentralPoly& a, const CentralPoly& b);
CentralPoly cp_mul(const CentralPoly& a, const CentralPoly& b);

// Evaluation at a central point (a_ij), flattened i-major.
AlgebraElement cp_eval(const CentralPoly& p, const std::vector<Rational>& point);

// g_1..g_m with p = sum_t v_t g_t.
std::vector<ScalarPoly> components(const CentralPoly& p);
CentralPoly recombine(AlgebraPtr ambient, std::size_t nvars, const std::vector<ScalarPoly>& parts);

}  // namespace divpoly
