#pragma once

#include <cstddef>
#include <vector>

#include "divpoly/groebner.hpp"
#include "divpoly/transport.hpp"

namespace divpoly {

// Two-sided ideal of H[x_1..x_n] together with its correspondent I' in
// S' = Q[y_ij]: the ideal of all components of phi(generator). Because the
// quaternion units are invertible and S' is central, the two-sided ideal of
// phi(gens) in S is I' tensored with H, so membership reduces to I'.
struct IdealHandle {
  AlgebraPtr ambient;
  std::size_t nvars = 0;
  std::vector<FreePoly> generators;
  std::vector<ScalarPoly> scalar_generators;
  GroebnerBasis gb;
};

// (a_s1, a_s2, a_s3, a_s4) for each coordinate s, concatenated.
std::vector<Rational> rho(const Point& a, const AlgebraSpec& spec);

IdealHandle make_ideal(const AlgebraPtr& ambient, std::size_t nvars, const std::vector<FreePoly>& gens);

bool member(const FreePoly& f, const IdealHandle& ideal);

bool vanishes(const IdealHandle& ideal, const Point& a);

struct RadicalCertificate {
  FreePoly f;
  unsigned m = 1;
  std::vector<FreePoly> witnesses;
};

// (f fbar)^m + sum f_i fbar_i in I. Acceptance means f lies in the
// quaternionic radical, hence vanishes on Z(I). Throws BadExponent for m < 1.
bool verify_radical_certificate(const RadicalCertificate& c, const IdealHandle& ideal);

std::vector<Point> scan_zero_locus(const IdealHandle& ideal, const std::vector<Point>& candidates);

}  // namespace divpoly
