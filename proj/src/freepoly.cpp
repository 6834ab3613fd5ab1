#include "divpoly/freepoly.hpp"

#include <algorithm>
#include <string>

#include "divpoly/error.hpp"

namespace divpoly {

Word::Word(std::vector<std::uint16_t> seq) : seq_(std::move(seq)) {
  if (seq_.size() % 2 != 1) throw Error(ErrorKind::InvalidFormat, "malformed word");
}

Word::Word(const std::vector<std::uint16_t>& basis, const std::vector<std::uint16_t>& vars) {
  if (basis.size() != vars.size() + 1)
    throw Error(ErrorKind::InvalidFormat, "a word of degree k needs k+1 basis indices");
  seq_.reserve(2 * vars.size() + 1);
  for (std::size_t r = 0; r < vars.size(); ++r) {
    seq_.push_back(basis[r]);
    seq_.push_back(vars[r]);
  }
  seq_.push_back(basis.back());
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.seq_.size() <=> b.seq_.size(); c != 0) return c;
  for (std::size_t r = 1; r < a.seq_.size(); r += 2)
    if (auto c = a.seq_[r] <=> b.seq_[r]; c != 0) return c;
  for (std::size_t r = 0; r < a.seq_.size(); r += 2)
    if (auto c = a.seq_[r] <=> b.seq_[r]; c != 0) return c;
  return std::strong_ordering::equal;
}

FreePoly FreePoly::constant(AlgebraPtr ambient, std::size_t nvars, const AlgebraElement& a) {
  if (a.coords.size() != ambient->dim()) throw Error(ErrorKind::AmbientMismatch, "constant from another algebra");
  FreePoly p(std::move(ambient), nvars);
  for (std::size_t s = 0; s < a.coords.size(); ++s)
    if (!divpoly::is_zero(a.coords[s])) p.terms_.emplace(Word(std::vector<std::uint16_t>{std::uint16_t(s)}), a.coords[s]);
  return p;
}

FreePoly FreePoly::scalar(AlgebraPtr ambient, std::size_t nvars, const Rational& q) {
  FreePoly p(std::move(ambient), nvars);
  if (!divpoly::is_zero(q)) p.terms_.emplace(Word(), q);
  return p;
}

FreePoly FreePoly::variable(AlgebraPtr ambient, std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw Error(ErrorKind::VariableOutOfRange, "x" + std::to_string(index + 1) + " with n=" + std::to_string(nvars));
  FreePoly p(std::move(ambient), nvars);
  p.terms_.emplace(Word(std::vector<std::uint16_t>{0, std::uint16_t(index), 0}), Rational(1));
  return p;
}

FreePoly FreePoly::monomial(AlgebraPtr ambient, std::size_t nvars, const Word& w, const Rational& coef) {
  for (std::size_t r = 0; r <= w.degree(); ++r)
    if (w.basis(r) >= ambient->dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  for (std::size_t r = 0; r < w.degree(); ++r)
    if (w.var(r) >= nvars) throw Error(ErrorKind::VariableOutOfRange, "variable index out of range");
  FreePoly p(std::move(ambient), nvars);
  p.add_term(w, coef);
  return p;
}

void FreePoly::add_term(const Word& w, const Rational& coef) {
  if (divpoly::is_zero(coef)) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (divpoly::is_zero(it->second)) terms_.erase(it);
  }
}

void FreePoly::add_term(Word&& w, const Rational& coef) {
  if (divpoly::is_zero(coef)) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), coef);
  if (!inserted) {
    it->second += coef;
    if (divpoly::is_zero(it->second)) terms_.erase(it);
  }
}

bool FreePoly::compatible(const FreePoly& other) const {
  return nvars_ == other.nvars_ && (ambient_ == other.ambient_ || ambient_->same_algebra(*other.ambient_));
}

namespace {

void require_compatible(const FreePoly& a, const FreePoly& b) {
  if (!a.compatible(b)) throw Error(ErrorKind::AmbientMismatch, "polynomials over different rings");
}

}  // namespace

bool operator==(const FreePoly& a, const FreePoly& b) { return a.compatible(b) && a.terms_ == b.terms_; }

FreePoly& FreePoly::operator+=(const FreePoly& other) {
  require_compatible(*this, other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& other) {
  require_compatible(*this, other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
  FreePoly r = a;
  r += b;
  return r;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) {
  FreePoly r = a;
  r -= b;
  return r;
}

FreePoly operator-(const FreePoly& a) { return Rational(-1) * a; }

FreePoly operator*(const Rational& q, const FreePoly& a) {
  FreePoly r(a.ambient(), a.nvars());
  if (divpoly::is_zero(q)) return r;
  for (const auto& [w, c] : a.terms()) r.add_term(w, q * c);
  return r;
}

void fp_mul_accumulate(FreePoly& acc, const FreePoly& a, const FreePoly& b, const Rational& scale) {
  require_compatible(a, b);
  require_compatible(acc, a);
  const auto& spec = a.algebra();
  std::vector<std::uint16_t> seq;
  Rational coef;
  for (const auto& [wa, ca] : a.terms()) {
    const auto& sa = wa.seq();
    for (const auto& [wb, cb] : b.terms()) {
      const auto& sb = wb.seq();
      Rational cab = scale * ca * cb;
      for (const auto& p : spec.product(sa.back(), sb.front())) {
        seq.assign(sa.begin(), sa.end());
        seq.back() = static_cast<std::uint16_t>(p.index);
        seq.insert(seq.end(), sb.begin() + 1, sb.end());
        coef = cab * p.coef;
        acc.add_term(Word(seq), coef);
      }
    }
  }
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly r(a.ambient(), a.nvars());
  fp_mul_accumulate(r, a, b);
  return r;
}

FreePoly fp_add(const FreePoly& a, const FreePoly& b) { return a + b; }
FreePoly fp_scale(const Rational& q, const FreePoly& a) { return q * a; }
FreePoly fp_mul(const FreePoly& a, const FreePoly& b) { return a * b; }

FreePoly fp_pow(const FreePoly& a, unsigned e) {
  FreePoly r = FreePoly::scalar(a.ambient(), a.nvars(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

AlgebraElement fp_eval(const FreePoly& p, const Point& a) {
  const auto& spec = p.algebra();
  if (a.coords.size() != p.nvars())
    throw Error(ErrorKind::AmbientMismatch, "point has " + std::to_string(a.coords.size()) + " coordinates, expected " +
                                                std::to_string(p.nvars()));
  for (const auto& c : a.coords)
    if (c.coords.size() != spec.dim()) throw Error(ErrorKind::AmbientMismatch, "point coordinate outside the algebra");
  AlgebraElement sum = spec.zero();
  for (const auto& [w, c] : p.terms()) {
    AlgebraElement acc = spec.basis(w.basis(0));
    for (std::size_t r = 0; r < w.degree(); ++r) {
      acc = mul(acc, a.coords[w.var(r)], spec);
      acc = mul(acc, spec.basis(w.basis(r + 1)), spec);
    }
    sum += c * acc;
  }
  return sum;
}

FreePoly fp_conj(const FreePoly& p) {
  if (!p.algebra().is_quaternion())
    throw Error(ErrorKind::NotQuaternionAmbient, "conjugation is defined over the quaternions only");
  FreePoly r = p;
  for (std::size_t u = 1; u < 4; ++u) {
    auto unit = FreePoly::constant(p.ambient(), p.nvars(), p.algebra().basis(u));
    r += unit * p * unit;
  }
  return Rational(-1, 2) * r;
}

FreePoly fp_norm(const FreePoly& p) { return p * fp_conj(p); }

}  // namespace divpoly
