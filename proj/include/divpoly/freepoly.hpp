#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "divpoly/algebra.hpp"

namespace divpoly {

// v_{s0} x_{mu1} v_{s1} ... x_{muk} v_{sk}, stored interleaved as
// [s0, mu1, s1, ..., muk, sk] with 0-based indices.
class Word {
 public:
  Word() : seq_{0} {}
  explicit Word(std::vector<std::uint16_t> seq);
  Word(const std::vector<std::uint16_t>& basis, const std::vector<std::uint16_t>& vars);

  std::size_t degree() const { return seq_.size() / 2; }
  std::uint16_t basis(std::size_t r) const { return seq_[2 * r]; }
  std::uint16_t var(std::size_t r) const { return seq_[2 * r + 1]; }  // r-th variable, r < degree()
  const std::vector<std::uint16_t>& seq() const { return seq_; }

  // Graded lexicographic on (degree, variables, basis indices).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint16_t> seq_;
};

struct Point {
  std::vector<AlgebraElement> coords;
};

// Element of D *_F F<x_1..x_n> on the interlaced-word basis. No stored zero
// coefficients, so map equality is ring equality.
class FreePoly {
 public:
  using Terms = std::map<Word, Rational>;

  FreePoly(AlgebraPtr ambient, std::size_t nvars) : ambient_(std::move(ambient)), nvars_(nvars) {}

  static FreePoly constant(AlgebraPtr ambient, std::size_t nvars, const AlgebraElement& a);
  static FreePoly scalar(AlgebraPtr ambient, std::size_t nvars, const Rational& q);
  static FreePoly variable(AlgebraPtr ambient, std::size_t nvars, std::size_t index);
  static FreePoly monomial(AlgebraPtr ambient, std::size_t nvars, const Word& w, const Rational& coef);

  const AlgebraPtr& ambient() const { return ambient_; }
  const AlgebraSpec& algebra() const { return *ambient_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  // Adds coef to the coefficient of w, erasing it if it cancels.
  void add_term(const Word& w, const Rational& coef);
  void add_term(Word&& w, const Rational& coef);

  FreePoly& operator+=(const FreePoly& other);
  FreePoly& operator-=(const FreePoly& other);

  // Same algebra and variable count.
  bool compatible(const FreePoly& other) const;

  friend bool operator==(const FreePoly& a, const FreePoly& b);

 private:
  AlgebraPtr ambient_;
  std::size_t nvars_;
  Terms terms_;
};

FreePoly operator+(const FreePoly& a, const FreePoly& b);
FreePoly operator-(const FreePoly& a, const FreePoly& b);
FreePoly operator-(const FreePoly& a);
FreePoly operator*(const FreePoly& a, const FreePoly& b);
FreePoly operator*(const Rational& q, const FreePoly& a);

FreePoly fp_add(const FreePoly& a, const FreePoly& b);
FreePoly fp_scale(const Rational& q, const FreePoly& a);
FreePoly fp_mul(const FreePoly& a, const FreePoly& b);

// acc += scale * a * b, without a temporary for the product.
void fp_mul_accumulate(FreePoly& acc, const FreePoly& a, const FreePoly& b, const Rational& scale = 1);

FreePoly fp_pow(const FreePoly& a, unsigned e);

AlgebraElement fp_eval(const FreePoly& p, const Point& a);

// -1/2 (p + i p i + j p j + k p k); quaternion ambient only.
FreePoly fp_conj(const FreePoly& p);

// p * fp_conj(p); quaternion ambient only.
FreePoly fp_norm(const FreePoly& p);

}  // namespace divpoly
