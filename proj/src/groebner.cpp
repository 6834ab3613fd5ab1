#include "divpoly/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "divpoly/error.hpp"

namespace divpoly {

bool GroebnerBasis::is_unit_ideal() const {
  return generators.size() == 1 && generators.front().leading_monomial().is_one();
}

ScalarPoly primitive_part(const ScalarPoly& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [mono, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (sgn(f.leading_coefficient()) < 0) scale = -scale;
  return scale * f;
}

ScalarPoly s_polynomial(const ScalarPoly& f, const ScalarPoly& g) {
  const auto& lf = f.leading_monomial();
  const auto& lg = g.leading_monomial();
  Monomial l = lcm(lf, lg);
  ScalarPoly s(f.nvars());
  s.add_multiple(1 / f.leading_coefficient(), quotient(l, lf), f);
  s.add_multiple(-1 / g.leading_coefficient(), quotient(l, lg), g);
  return s;
}

Division divide(const ScalarPoly& f, const std::vector<ScalarPoly>& divisors) {
  Division d{std::vector<ScalarPoly>(divisors.size(), ScalarPoly(f.nvars())), ScalarPoly(f.nvars())};
  ScalarPoly p = f;
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial();
    Rational lc = p.leading_coefficient();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
      Monomial q = quotient(lm, g.leading_monomial());
      Rational c = lc / g.leading_coefficient();
      d.quotients[i].add_term(q, c);
      p.add_multiple(-c, q, g);
      divided = true;
      break;
    }
    if (!divided) {
      d.remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return d;
}

ScalarPoly reduce(const ScalarPoly& f, const std::vector<ScalarPoly>& divisors) {
  ScalarPoly p = f;
  ScalarPoly rem(f.nvars());
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial();
    Rational lc = p.leading_coefficient();
    auto it = std::find_if(divisors.begin(), divisors.end(), [&](const ScalarPoly& g) {
      return !g.is_zero() && divides(g.leading_monomial(), lm);
    });
    if (it == divisors.end()) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    } else {
      p.add_multiple(-lc / it->leading_coefficient(), quotient(lm, it->leading_monomial()), *it);
    }
  }
  return rem;
}

ScalarPoly reduce(const ScalarPoly& f, const GroebnerBasis& gb) { return reduce(f, gb.generators); }

namespace {

struct Pair {
  Monomial lcm;
  std::size_t i, j;  // i < j
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    DegRevLex less;
    if (less(a.lcm, b.lcm)) return true;
    if (less(b.lcm, a.lcm)) return false;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }
};

std::vector<ScalarPoly> interreduce(std::vector<ScalarPoly> basis) {
  // drop elements whose leading monomial is divisible by another's
  std::vector<ScalarPoly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = basis[a].leading_monomial();
      const auto& lb = basis[b].leading_monomial();
      if (divides(lb, la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  std::vector<ScalarPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<ScalarPoly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    ScalarPoly r = reduce(minimal[a], others);
    reduced.push_back((1 / r.leading_coefficient()) * r);
  }
  std::sort(reduced.begin(), reduced.end(), [](const ScalarPoly& x, const ScalarPoly& y) {
    return DegRevLex{}(x.leading_monomial(), y.leading_monomial());
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<ScalarPoly>& gens) {
  std::vector<ScalarPoly> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!basis.empty() && g.nvars() != basis.front().nvars())
      throw Error(ErrorKind::LengthMismatch, "generators from different rings");
    basis.push_back(primitive_part(g));
  }
  // a constant generator makes the ideal the whole ring
  for (const auto& g : basis)
    if (g.leading_monomial().is_one()) return GroebnerBasis{{ScalarPoly::constant(g.nvars(), 1)}};

  std::set<Pair, PairOrder> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.insert(Pair{lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count(Pair{lcm(basis[a].leading_monomial(), basis[b].leading_monomial()), a, b}) > 0;
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  while (!pending.empty()) {
    Pair pair = *pending.begin();
    pending.erase(pending.begin());
    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    if (coprime(fi.leading_monomial(), fj.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (divides(basis[k].leading_monomial(), pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k))
        chain = true;
    }
    if (chain) continue;
    ScalarPoly r = reduce(s_polynomial(fi, fj), basis);
    if (r.is_zero()) continue;
    r = primitive_part(r);
    if (r.leading_monomial().is_one()) return GroebnerBasis{{ScalarPoly::constant(r.nvars(), 1)}};
    basis.push_back(std::move(r));
    add_pairs(basis.size() - 1);
  }
  return GroebnerBasis{interreduce(std::move(basis))};
}

bool satisfies_buchberger_criterion(const std::vector<ScalarPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool is_reduced_basis(const std::vector<ScalarPoly>& basis) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].is_zero() || basis[a].leading_coefficient() != 1) return false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& [mono, c] : basis[a].terms())
        if (divides(basis[b].leading_monomial(), mono)) return false;
    }
  }
  return true;
}

}  // namespace divpoly
