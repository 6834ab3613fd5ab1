#include "divpoly/transport.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "divpoly/error.hpp"

namespace divpoly {

FreePoly make_Y(const AlgebraPtr& spec, const CoordTable& table, std::size_t nvars, std::size_t i, std::size_t j) {
  const std::size_t m = spec->dim();
  if (i >= nvars || j >= m || table.dim() != m)
    throw Error(ErrorKind::IndexOutOfRange,
                "Y" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + " with n=" + std::to_string(nvars));
  FreePoly y(spec, nvars);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      if (!is_zero(table(j, s, t)))
        y.add_term(Word(std::vector<std::uint16_t>{std::uint16_t(s), std::uint16_t(i), std::uint16_t(t)}),
                   table(j, s, t));
  return y;
}

namespace {

// v_j * v_s for every (j, s), as full elements.
std::vector<AlgebraElement> basis_products(const AlgebraSpec& spec) {
  const std::size_t m = spec.dim();
  std::vector<AlgebraElement> out;
  out.reserve(m * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t s = 0; s < m; ++s) out.push_back(mul(spec.basis(j), spec.basis(s), spec));
  return out;
}

}  // namespace

CentralPoly phi(const FreePoly& p) {
  const auto& spec = p.algebra();
  const std::size_t m = spec.dim();
  const auto prods = basis_products(spec);
  CentralPoly out(p.ambient(), p.nvars());
  using State = std::map<Monomial, AlgebraElement, DegRevLex>;
  for (const auto& [w, c] : p.terms()) {
    State state;
    state.emplace(Monomial(out.ncentral()), c * spec.basis(w.basis(0)));
    for (std::size_t r = 0; r < w.degree(); ++r) {
      const std::size_t mu = w.var(r), s = w.basis(r + 1);
      State next;
      for (const auto& [mono, e] : state)
        for (std::size_t j = 0; j < m; ++j) {
          AlgebraElement coef = mul(e, prods[j * m + s], spec);
          if (coef.is_zero()) continue;
          Monomial nm = mono;
          ++nm.exps[mu * m + j];
          auto [it, inserted] = next.try_emplace(std::move(nm), coef);
          if (!inserted) it->second += coef;
        }
      state = std::move(next);
    }
    for (const auto& [mono, e] : state) out.add_term(mono, e);
  }
  return out;
}

FreePoly psi(const CentralPoly& q) {
  const auto& ambient = q.ambient();
  const std::size_t m = ambient->dim();
  const auto table = coordinate_functionals(*ambient);
  std::vector<FreePoly> ys;
  for (std::size_t i = 0; i < q.nvars(); ++i)
    for (std::size_t j = 0; j < m; ++j) ys.push_back(make_Y(ambient, table, q.nvars(), i, j));
  FreePoly out(ambient, q.nvars());
  for (const auto& [mono, a] : q.terms()) {
    FreePoly term = FreePoly::constant(ambient, q.nvars(), a);
    for (std::size_t l = 0; l < mono.nvars(); ++l)
      for (std::uint32_t e = 0; e < mono.exps[l]; ++e) term = term * ys[l];
    out += term;
  }
  return out;
}

bool is_identity(const FreePoly& p) { return phi(p).is_zero(); }

std::size_t GpiGeneratorSet::sort_index(std::size_t a, std::size_t b) const {
  const std::size_t letters = nvars * ambient->dim();
  if (a >= b || b >= letters) throw Error(ErrorKind::IndexOutOfRange, "sort generator needs letters a < b");
  const std::size_t commute = nvars * ambient->dim() * (ambient->dim() - 1);
  // pairs (a, b) enumerated row by row: before row a there are sum_{r<a} (letters-1-r)
  std::size_t before = a * (letters - 1) - a * (a - 1) / 2;
  return commute + before + (b - a - 1);
}

GpiGeneratorSet gpi_generators(const AlgebraPtr& spec, std::size_t nvars) {
  if (nvars == 0) throw Error(ErrorKind::IndexOutOfRange, "generalized identities need n >= 1");
  const std::size_t m = spec->dim();
  const auto table = coordinate_functionals(*spec);
  std::vector<FreePoly> ys;
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = 0; j < m; ++j) ys.push_back(make_Y(spec, table, nvars, i, j));
  auto unit = [&](std::size_t k) { return FreePoly::constant(spec, nvars, spec->basis(k)); };
  auto yname = [&](std::size_t l) { return "Y" + std::to_string(l / m + 1) + "_" + std::to_string(l % m + 1); };

  GpiGeneratorSet set{spec, nvars, {}};
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 1; k < m; ++k) {
        const auto& y = ys[i * m + j];
        set.generators.push_back({GpiFamily::Commute, {i, j, k}, unit(k) * y - y * unit(k),
                                  spec->labels()[k] + "*" + yname(i * m + j) + " - " + yname(i * m + j) + "*" +
                                      spec->labels()[k]});
      }
  const std::size_t letters = nvars * m;
  for (std::size_t a = 0; a < letters; ++a)
    for (std::size_t b = a + 1; b < letters; ++b)
      set.generators.push_back({GpiFamily::Sort, {a, b}, ys[a] * ys[b] - ys[b] * ys[a],
                                yname(a) + "*" + yname(b) + " - " + yname(b) + "*" + yname(a)});
  for (std::size_t i = 0; i < nvars; ++i) {
    FreePoly g = FreePoly::variable(spec, nvars, i);
    std::string label = "x" + std::to_string(i + 1) + " - (";
    for (std::size_t j = 0; j < m; ++j) {
      g -= ys[i * m + j] * unit(j);
      label += (j ? " + " : "") + yname(i * m + j) + "*" + spec->labels()[j];
    }
    set.generators.push_back({GpiFamily::Substitute, {i}, std::move(g), label + ")"});
  }
  return set;
}

namespace {

using YWord = std::vector<std::uint16_t>;
using Lifted = std::map<YWord, AlgebraElement>;

// p = sum_y c_y * Y_{y1} ... Y_{yk}, obtained by writing every x_i as
// sum_j Y_ij v_j and collecting the (commuting) algebra coefficients on the
// left. Exact in the free algebra: x_i - sum_j Y_ij v_j and v Y - Y v are zero
// there, because its degree-one part is End_F(D).
Lifted lift(const FreePoly& p) {
  const auto& spec = p.algebra();
  const std::size_t m = spec.dim();
  const auto prods = basis_products(spec);
  Lifted out;
  std::vector<std::pair<YWord, AlgebraElement>> state, next;
  for (const auto& [w, c] : p.terms()) {
    state.clear();
    state.emplace_back(YWord{}, c * spec.basis(w.basis(0)));
    for (std::size_t r = 0; r < w.degree(); ++r) {
      const std::size_t mu = w.var(r), s = w.basis(r + 1);
      next.clear();
      for (const auto& [yw, e] : state)
        for (std::size_t j = 0; j < m; ++j) {
          AlgebraElement coef = mul(e, prods[j * m + s], spec);
          if (coef.is_zero()) continue;
          YWord nw = yw;
          nw.push_back(static_cast<std::uint16_t>(mu * m + j));
          next.emplace_back(std::move(nw), std::move(coef));
        }
      std::swap(state, next);
    }
    for (auto& [yw, e] : state) {
      auto [it, inserted] = out.try_emplace(yw, e);
      if (!inserted) {
        it->second += e;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

class Expander {
 public:
  Expander(const AlgebraPtr& spec, std::size_t nvars) : spec_(spec), nvars_(nvars) {
    const auto table = coordinate_functionals(*spec);
    for (std::size_t i = 0; i < nvars; ++i)
      for (std::size_t j = 0; j < spec->dim(); ++j) ys_.push_back(make_Y(spec, table, nvars, i, j));
    memo_.emplace(YWord{}, FreePoly::scalar(spec, nvars, 1));
  }

  const FreePoly& operator()(const YWord& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    YWord prefix(w.begin(), w.end() - 1);
    FreePoly value = (*this)(prefix) * ys_[w.back()];
    return memo_.emplace(w, std::move(value)).first->second;
  }

  FreePoly operator()(const Lifted& poly) {
    FreePoly out(spec_, nvars_);
    for (const auto& [w, c] : poly) fp_mul_accumulate(out, FreePoly::constant(spec_, nvars_, c), (*this)(w));
    return out;
  }

 private:
  AlgebraPtr spec_;
  std::size_t nvars_;
  std::vector<FreePoly> ys_;
  std::map<YWord, FreePoly> memo_;
};

}  // namespace

GpiCertificate gpi_certificate(const FreePoly& p) {
  if (p.nvars() == 0) {
    if (!p.is_zero()) throw Error(ErrorKind::NotAnIdentity, "nonzero constant");
    return {p, {}};
  }
  return gpi_certificate(p, gpi_generators(p.ambient(), p.nvars()));
}

GpiCertificate gpi_certificate(const FreePoly& p, const GpiGeneratorSet& gens) {
  if (gens.nvars != p.nvars() || !gens.ambient->same_algebra(p.algebra()))
    throw Error(ErrorKind::AmbientMismatch, "generator set for a different ring");
  Lifted lifted = lift(p);

  // Every word must collapse to zero once its letters commute.
  std::map<YWord, AlgebraElement> abelian;
  for (const auto& [w, c] : lifted) {
    YWord sorted = w;
    std::sort(sorted.begin(), sorted.end());
    auto [it, inserted] = abelian.try_emplace(std::move(sorted), c);
    if (!inserted) it->second += c;
  }
  for (const auto& [w, c] : abelian)
    if (!c.is_zero()) throw Error(ErrorKind::NotAnIdentity, "phi(p) is nonzero");

  // Insertion sort from the right. Swapping adjacent letters b < a in
  // P * Y_a Y_b * R costs the step  -c * P * (Y_b Y_a - Y_a Y_b) * R  with R
  // already sorted; lefts are accumulated per (generator, R).
  std::map<std::pair<std::size_t, YWord>, Lifted> groups;
  for (const auto& [w, c] : lifted) {
    if (w.size() < 2) continue;
    YWord tail{w.back()};
    for (std::size_t r = w.size() - 1; r-- > 0;) {
      const auto a = w[r];
      std::size_t pos = 0;
      while (pos < tail.size() && tail[pos] < a) {
        YWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
        left.insert(left.end(), tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(pos));
        YWord right(tail.begin() + static_cast<std::ptrdiff_t>(pos) + 1, tail.end());
        auto& bucket = groups[{gens.sort_index(tail[pos], a), std::move(right)}];
        AlgebraElement neg = -c;
        auto [it, inserted] = bucket.try_emplace(std::move(left), neg);
        if (!inserted) {
          it->second += neg;
          if (it->second.is_zero()) bucket.erase(it);
        }
        ++pos;
      }
      tail.insert(tail.begin() + static_cast<std::ptrdiff_t>(pos), a);
    }
  }

  // Expand into x-words; split each right cofactor into single words.
  Expander expand(p.ambient(), p.nvars());
  std::map<std::pair<std::size_t, Word>, FreePoly> steps;
  for (const auto& [key, left] : groups) {
    if (left.empty()) continue;
    FreePoly left_x = expand(left);
    if (left_x.is_zero()) continue;
    for (const auto& [xi, coef] : expand(key.second).terms()) {
      auto [it, inserted] = steps.try_emplace({key.first, xi}, coef * left_x);
      if (!inserted) it->second += coef * left_x;
    }
  }

  GpiCertificate cert{p, {}};
  for (auto& [key, left] : steps) {
    if (left.is_zero()) continue;
    cert.steps.push_back({std::move(left), key.first, FreePoly::monomial(p.ambient(), p.nvars(), key.second, 1)});
  }
  return cert;
}

bool verify_certificate(const GpiCertificate& c) {
  if (c.target.nvars() == 0) return c.steps.empty() && c.target.is_zero();
  return verify_certificate(c, gpi_generators(c.target.ambient(), c.target.nvars()));
}

bool verify_certificate(const GpiCertificate& c, const GpiGeneratorSet& gens) {
  FreePoly sum(c.target.ambient(), c.target.nvars());
  for (const auto& step : c.steps) {
    if (step.generator >= gens.size()) return false;
    if (!step.left.compatible(c.target) || !step.right.compatible(c.target)) return false;
    const auto& g = gens[step.generator];
    if (!g.compatible(c.target)) return false;
    FreePoly lg = step.left * g;
    fp_mul_accumulate(sum, lg, step.right);
  }
  return sum == c.target;
}

}  // namespace divpoly
