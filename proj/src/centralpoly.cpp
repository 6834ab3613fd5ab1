#include "divpoly/centralpoly.hpp"

#include <algorithm>
#include <string>

#include "divpoly/error.hpp"

namespace divpoly {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t k = 0; k < r.exps.size(); ++k) r.exps[k] += b.exps[k];
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.exps.size(); ++k)
    if (a.exps[k] > b.exps[k]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (std::size_t k = 0; k < r.exps.size(); ++k) r.exps[k] -= a.exps[k];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t k = 0; k < r.exps.size(); ++k) r.exps[k] = std::max(a.exps[k], b.exps[k]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.exps.size(); ++k)
    if (a.exps[k] && b.exps[k]) return false;
  return true;
}

bool DegRevLex::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t k = a.exps.size(); k-- > 0;)
    if (a.exps[k] != b.exps[k]) return a.exps[k] > b.exps[k];
  return false;
}

// ---------------------------------------------------------------- ScalarPoly

ScalarPoly ScalarPoly::constant(std::size_t nvars, const Rational& q) {
  ScalarPoly p(nvars);
  p.add_term(Monomial(nvars), q);
  return p;
}

ScalarPoly ScalarPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorKind::IndexOutOfRange, "central variable index out of range");
  Monomial mono(nvars);
  mono.exps[index] = 1;
  return term(mono, 1);
}

ScalarPoly ScalarPoly::term(const Monomial& mono, const Rational& coef) {
  ScalarPoly p(mono.nvars());
  p.add_term(mono, coef);
  return p;
}

void ScalarPoly::add_term(const Monomial& mono, const Rational& coef) {
  if (divpoly::is_zero(coef)) return;
  if (mono.nvars() != nvars_) throw Error(ErrorKind::LengthMismatch, "monomial from another ring");
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second += coef;
    if (divpoly::is_zero(it->second)) terms_.erase(it);
  }
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorKind::LengthMismatch, "polynomials over different rings");
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& other) {
  if (other.nvars_ != nvars_) throw Error(ErrorKind::LengthMismatch, "polynomials over different rings");
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

void ScalarPoly::add_multiple(const Rational& coef, const Monomial& mono, const ScalarPoly& p) {
  if (divpoly::is_zero(coef)) return;
  for (const auto& [m, c] : p.terms_) add_term(m * mono, coef * c);
}

Rational ScalarPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::LengthMismatch, "point has the wrong length");
  Rational sum;
  for (const auto& [mono, c] : terms_) {
    Rational v = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      for (std::uint32_t e = 0; e < mono.exps[k]; ++e) v *= point[k];
    sum += v;
  }
  return sum;
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly r = a;
  r += b;
  return r;
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly r = a;
  r -= b;
  return r;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::LengthMismatch, "polynomials over different rings");
  ScalarPoly r(a.nvars());
  for (const auto& [mono, c] : a.terms()) r.add_multiple(c, mono, b);
  return r;
}

ScalarPoly operator*(const Rational& q, const ScalarPoly& a) {
  ScalarPoly r(a.nvars());
  if (is_zero(q)) return r;
  for (const auto& [mono, c] : a.terms()) r.add_term(mono, q * c);
  return r;
}

// --------------------------------------------------------------- CentralPoly

CentralPoly CentralPoly::constant(AlgebraPtr ambient, std::size_t nvars, const AlgebraElement& a) {
  CentralPoly p(std::move(ambient), nvars);
  p.add_term(Monomial(p.ncentral()), a);
  return p;
}

CentralPoly CentralPoly::variable(AlgebraPtr ambient, std::size_t nvars, std::size_t i, std::size_t j) {
  const std::size_t m = ambient->dim();
  if (i >= nvars || j >= m)
    throw Error(ErrorKind::IndexOutOfRange, "y" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  CentralPoly p(std::move(ambient), nvars);
  Monomial mono(p.ncentral());
  mono.exps[i * m + j] = 1;
  p.add_term(mono, p.algebra().one());
  return p;
}

CentralPoly CentralPoly::from_scalar(AlgebraPtr ambient, std::size_t nvars, const ScalarPoly& g) {
  CentralPoly p(std::move(ambient), nvars);
  if (g.nvars() != p.ncentral()) throw Error(ErrorKind::LengthMismatch, "scalar polynomial from another ring");
  for (const auto& [mono, c] : g.terms()) p.add_term(mono, p.algebra().scalar(c));
  return p;
}

void CentralPoly::add_term(const Monomial& mono, const AlgebraElement& coef) {
  if (coef.coords.size() != ambient_->dim()) throw Error(ErrorKind::AmbientMismatch, "coefficient outside the algebra");
  if (mono.nvars() != ncentral()) throw Error(ErrorKind::LengthMismatch, "monomial from another ring");
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool CentralPoly::compatible(const CentralPoly& other) const {
  return nvars_ == other.nvars_ && (ambient_ == other.ambient_ || ambient_->same_algebra(*other.ambient_));
}

bool operator==(const CentralPoly& a, const CentralPoly& b) { return a.compatible(b) && a.terms_ == b.terms_; }

CentralPoly& CentralPoly::operator+=(const CentralPoly& other) {
  if (!compatible(other)) throw Error(ErrorKind::AmbientMismatch, "polynomials over different rings");
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& other) {
  if (!compatible(other)) throw Error(ErrorKind::AmbientMismatch, "polynomials over different rings");
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

CentralPoly operator+(const CentralPoly& a, const CentralPoly& b) {
  CentralPoly r = a;
  r += b;
  return r;
}

CentralPoly operator-(const CentralPoly& a, const CentralPoly& b) {
  CentralPoly r = a;
  r -= b;
  return r;
}

CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
  if (!a.compatible(b)) throw Error(ErrorKind::AmbientMismatch, "polynomials over different rings");
  CentralPoly r(a.ambient(), a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, mul(ca, cb, a.algebra()));
  return r;
}

CentralPoly operator*(const Rational& q, const CentralPoly& a) {
  CentralPoly r(a.ambient(), a.nvars());
  for (const auto& [mono, c] : a.terms()) r.add_term(mono, q * c);
  return r;
}

CentralPoly cp_add(const CentralPoly& a, const CentralPoly& b) { return a + b; }
CentralPoly cp_mul(const CentralPoly& a, const CentralPoly& b) { return a * b; }

AlgebraElement cp_eval(const CentralPoly& p, const std::vector<Rational>& point) {
  if (point.size() != p.ncentral())
    throw Error(ErrorKind::LengthMismatch,
                "expected " + std::to_string(p.ncentral()) + " central coordinates, got " + std::to_string(point.size()));
  AlgebraElement sum = p.algebra().zero();
  for (const auto& [mono, c] : p.terms()) {
    Rational v = 1;
    for (std::size_t k = 0; k < mono.nvars(); ++k)
      for (std::uint32_t e = 0; e < mono.exps[k]; ++e) v *= point[k];
    sum += v * c;
  }
  return sum;
}

std::vector<ScalarPoly> components(const CentralPoly& p) {
  std::vector<ScalarPoly> parts(p.algebra().dim(), ScalarPoly(p.ncentral()));
  for (const auto& [mono, c] : p.terms())
    for (std::size_t t = 0; t < c.coords.size(); ++t) parts[t].add_term(mono, c.coords[t]);
  return parts;
}

CentralPoly recombine(AlgebraPtr ambient, std::size_t nvars, const std::vector<ScalarPoly>& parts) {
  CentralPoly p(ambient, nvars);
  if (parts.size() != ambient->dim()) throw Error(ErrorKind::LengthMismatch, "one component per basis element");
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if (parts[t].nvars() != p.ncentral()) throw Error(ErrorKind::LengthMismatch, "component from another ring");
    for (const auto& [mono, c] : parts[t].terms()) p.add_term(mono, c * ambient->basis(t));
  }
  return p;
}

}  // namespace divpoly
