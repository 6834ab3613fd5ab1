#include "divpoly/nullstellensatz.hpp"

#include <string>

#include "divpoly/error.hpp"

namespace divpoly {

namespace {

void require_quaternion(const AlgebraSpec& spec) {
  if (!spec.is_quaternion()) throw Error(ErrorKind::NotQuaternionAmbient, "ideals are handled over the quaternions");
}

void require_same_ring(const FreePoly& f, const IdealHandle& ideal) {
  if (f.nvars() != ideal.nvars || !f.algebra().same_algebra(*ideal.ambient))
    throw Error(ErrorKind::AmbientMismatch, "polynomial and ideal live in different rings");
}

void require_point(const Point& a, const IdealHandle& ideal) {
  if (a.coords.size() != ideal.nvars)
    throw Error(ErrorKind::AmbientMismatch, "point has " + std::to_string(a.coords.size()) +
                                                " coordinates, ideal has n=" + std::to_string(ideal.nvars));
  for (const auto& c : a.coords)
    if (c.coords.size() != ideal.ambient->dim()) throw Error(ErrorKind::AmbientMismatch, "point is not quaternionic");
}

bool central_member(const CentralPoly& image, const GroebnerBasis& gb) {
  for (const auto& part : components(image))
    if (!reduce(part, gb).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<Rational> rho(const Point& a, const AlgebraSpec& spec) {
  require_quaternion(spec);
  std::vector<Rational> flat;
  flat.reserve(a.coords.size() * 4);
  for (const auto& q : a.coords) {
    if (q.coords.size() != 4) throw Error(ErrorKind::AmbientMismatch, "point is not quaternionic");
    flat.insert(flat.end(), q.coords.begin(), q.coords.end());
  }
  return flat;
}

IdealHandle make_ideal(const AlgebraPtr& ambient, std::size_t nvars, const std::vector<FreePoly>& gens) {
  require_quaternion(*ambient);
  IdealHandle ideal{ambient, nvars, gens, {}, {}};
  for (const auto& g : gens) {
    require_same_ring(g, ideal);
    for (auto& part : components(phi(g))) ideal.scalar_generators.push_back(std::move(part));
  }
  ideal.gb = buchberger(ideal.scalar_generators);
  return ideal;
}

bool member(const FreePoly& f, const IdealHandle& ideal) {
  require_same_ring(f, ideal);
  return central_member(phi(f), ideal.gb);
}

bool vanishes(const IdealHandle& ideal, const Point& a) {
  require_point(a, ideal);
  for (const auto& g : ideal.generators)
    if (!fp_eval(g, a).is_zero()) return false;
  return true;
}

bool verify_radical_certificate(const RadicalCertificate& c, const IdealHandle& ideal) {
  if (c.m < 1) throw Error(ErrorKind::BadExponent, "the exponent m must be at least 1");
  require_same_ring(c.f, ideal);
  // phi is a ring homomorphism, so the power is taken on the central side.
  CentralPoly norm = phi(fp_norm(c.f));
  CentralPoly total = CentralPoly::constant(ideal.ambient, ideal.nvars, ideal.ambient->one());
  for (unsigned e = 0; e < c.m; ++e) total = total * norm;
  for (const auto& w : c.witnesses) {
    require_same_ring(w, ideal);
    total += phi(fp_norm(w));
  }
  return central_member(total, ideal.gb);
}

std::vector<Point> scan_zero_locus(const IdealHandle& ideal, const std::vector<Point>& candidates) {
  std::vector<Point> hits;
  for (const auto& a : candidates)
    if (vanishes(ideal, a)) hits.push_back(a);
  return hits;
}

}  // namespace divpoly
