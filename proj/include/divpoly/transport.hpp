#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "divpoly/centralpoly.hpp"
#include "divpoly/freepoly.hpp"

namespace divpoly {

// Y_ij = sum_{s,t} b[j][s][t] v_s x_i v_t  (i, j 0-based).
FreePoly make_Y(const AlgebraPtr& spec, const CoordTable& table, std::size_t nvars, std::size_t i, std::size_t j);

// The isomorphism onto D_c[y_ij], x_i -> sum_j v_j y_ij, word by word.
CentralPoly phi(const FreePoly& p);

// y_ij -> Y_ij; phi(psi(q)) == q.
FreePoly psi(const CentralPoly& q);

// p vanishes on all of D^n, i.e. phi(p) == 0.
bool is_identity(const FreePoly& p);

enum class GpiFamily { Commute, Sort, Substitute };

struct GpiGenerator {
  GpiFamily family;
  // Commute: (i, j, k) for v_k Y_ij - Y_ij v_k.
  // Sort: (i, j, i', j') flattened to letters a < b for Y_a Y_b - Y_b Y_a.
  // Substitute: i for x_i - sum_j Y_ij v_j.  All 0-based.
  std::vector<std::size_t> indices;
  FreePoly element;
  std::string label;  // human-readable form, 1-based
};

// Families in order: all Commute (i, j, k>1), all Sort ((i,j) < (i',j')),
// all Substitute (i). Size n m (m-1) + C(nm, 2) + n.
struct GpiGeneratorSet {
  AlgebraPtr ambient;
  std::size_t nvars;
  std::vector<GpiGenerator> generators;

  std::size_t size() const { return generators.size(); }
  const FreePoly& operator[](std::size_t k) const { return generators[k].element; }
  // Index of Y_a Y_b - Y_b Y_a for letters a < b (letter = i*m + j).
  std::size_t sort_index(std::size_t a, std::size_t b) const;
};

GpiGeneratorSet gpi_generators(const AlgebraPtr& spec, std::size_t nvars);

struct CertificateStep {
  FreePoly left;
  std::size_t generator;
  FreePoly right;
};

// target == sum over steps of left * generators[generator] * right.
struct GpiCertificate {
  FreePoly target;
  std::vector<CertificateStep> steps;
};

// Throws NotAnIdentity unless phi(p) == 0.
GpiCertificate gpi_certificate(const FreePoly& p);
GpiCertificate gpi_certificate(const FreePoly& p, const GpiGeneratorSet& gens);

bool verify_certificate(const GpiCertificate& c);
bool verify_certificate(const GpiCertificate& c, const GpiGeneratorSet& gens);

}  // namespace divpoly
