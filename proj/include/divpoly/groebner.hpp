#pragma once

#include <vector>

#include "divpoly/centralpoly.hpp"

namespace divpoly {

// Reduced Groebner basis under DegRevLex: monic, interreduced, sorted by
// ascending leading monomial. Unique for the ideal.
struct GroebnerBasis {
  std::vector<ScalarPoly> generators;

  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return generators.empty(); }
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

GroebnerBasis buchberger(const std::vector<ScalarPoly>& gens);

// f = sum_i quotients[i] * divisors[i] + remainder, no term of the remainder
// divisible by any leading monomial.
struct Division {
  std::vector<ScalarPoly> quotients;
  ScalarPoly remainder;
};

Division divide(const ScalarPoly& f, const std::vector<ScalarPoly>& divisors);

// Normal form modulo gb; zero exactly when f lies in the ideal.
ScalarPoly reduce(const ScalarPoly& f, const GroebnerBasis& gb);
ScalarPoly reduce(const ScalarPoly& f, const std::vector<ScalarPoly>& divisors);

ScalarPoly s_polynomial(const ScalarPoly& f, const ScalarPoly& g);

// Integer coefficients with gcd 1 and positive leading coefficient.
ScalarPoly primitive_part(const ScalarPoly& f);

// Every S-polynomial of a pair reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<ScalarPoly>& basis);

// Reduced-basis shape (monic, no term divisible by another leading monomial).
bool is_reduced_basis(const std::vector<ScalarPoly>& basis);

}  // namespace divpoly
