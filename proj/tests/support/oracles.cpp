#include "oracles.hpp"

#include <algorithm>

namespace divpoly::testing {

Quat hamilton(const Quat& p, const Quat& q) {
  const auto& [a1, b1, c1, d1] = p;
  const auto& [a2, b2, c2, d2] = q;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

Quat quat_conj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Quat to_quat(const AlgebraElement& a) { return {a.coords[0], a.coords[1], a.coords[2], a.coords[3]}; }

AlgebraElement from_quat(const Quat& q) { return AlgebraElement{{q[0], q[1], q[2], q[3]}}; }

Quat eval_hamilton(const FreePoly& p, const std::vector<Quat>& point) {
  Quat sum{0, 0, 0, 0};
  for (const auto& [w, c] : p.terms()) {
    Quat unit{0, 0, 0, 0};
    unit[w.basis(0)] = 1;
    Quat acc = unit;
    for (std::size_t r = 0; r < w.degree(); ++r) {
      acc = hamilton(acc, point[w.var(r)]);
      Quat v{0, 0, 0, 0};
      v[w.basis(r + 1)] = 1;
      acc = hamilton(acc, v);
    }
    for (int s = 0; s < 4; ++s) sum[s] += c * acc[s];
  }
  return sum;
}

AlgebraElement eval_central_direct(const CentralPoly& q, const std::vector<Rational>& y) {
  AlgebraElement out = q.algebra().zero();
  for (const auto& [mono, coef] : q.terms()) {
    Rational value = 1;
    for (std::size_t k = 0; k < mono.exps.size(); ++k)
      for (std::uint32_t e = 0; e < mono.exps[k]; ++e) value *= y[k];
    for (std::size_t s = 0; s < coef.coords.size(); ++s) out.coords[s] += value * coef.coords[s];
  }
  return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

namespace {

// Coordinates of x in the basis, by solving the 4x4 system.
std::vector<Rational> mat2_coords(const Mat2& x, const std::array<Mat2, 4>& basis) {
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) a[r][s] = basis[s][r];
  std::vector<Rational> b(x.begin(), x.end());
  return *solve_dense(a, b);
}

}  // namespace

std::vector<std::vector<std::vector<Rational>>> mat2_structure_constants(const std::array<Mat2, 4>& basis) {
  std::vector<std::vector<std::vector<Rational>>> c(4, std::vector<std::vector<Rational>>(4));
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) c[s][t] = mat2_coords(mat2_mul(basis[s], basis[t]), basis);
  return c;
}

std::vector<std::vector<Integer>> mat2_sandwich_matrix(const std::array<Mat2, 4>& basis) {
  std::vector<std::vector<Rational>> q(16, std::vector<Rational>(16));
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int w = 0; w < 4; ++w) {
        auto coords = mat2_coords(mat2_mul(mat2_mul(basis[s], basis[w]), basis[t]), basis);
        for (int u = 0; u < 4; ++u) q[u * 4 + w][s * 4 + t] = coords[u];
      }
  Integer den = 1;
  for (const auto& row : q)
    for (const auto& v : row) den = lcm(den, Integer(v.get_den()));
  std::vector<std::vector<Integer>> out(16, std::vector<Integer>(16));
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) {
      Rational scaled = q[r][c] * den;
      out[r][c] = scaled.get_num();
    }
  return out;
}

Poly to_poly(const ScalarPoly& p) {
  Poly out;
  for (const auto& [mono, c] : p.terms()) out[mono.exps] = c;
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b) out[e] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::size_t poly_degree(const Poly& p) {
  std::size_t d = 0;
  for (const auto& [e, c] : p) {
    std::size_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Rational poly_eval(const Poly& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& [e, c] : p) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (std::uint32_t r = 0; r < e[k]; ++r) term *= point[k];
    sum += term;
  }
  return sum;
}

namespace {

void monomials_up_to(std::size_t nvars, std::size_t degree, std::vector<std::uint32_t>& cur, std::size_t k,
                     std::vector<std::vector<std::uint32_t>>& out) {
  if (k == nvars) {
    out.push_back(cur);
    return;
  }
  for (std::size_t e = 0; e <= degree; ++e) {
    cur[k] = static_cast<std::uint32_t>(e);
    monomials_up_to(nvars, degree - e, cur, k + 1, out);
  }
  cur[k] = 0;
}

}  // namespace

std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

std::optional<std::vector<Poly>> bounded_membership(const std::vector<Poly>& gens, const Poly& f, std::size_t nvars,
                                                    std::size_t bound) {
  // Unknowns: coefficient of each multiplier monomial for each generator.
  struct Unknown {
    std::size_t gen;
    std::vector<std::uint32_t> mono;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::size_t dg = poly_degree(gens[g]);
    if (gens[g].empty() || dg > bound) continue;
    std::vector<std::vector<std::uint32_t>> monos;
    std::vector<std::uint32_t> cur(nvars, 0);
    monomials_up_to(nvars, bound - dg, cur, 0, monos);
    for (auto& m : monos) unknowns.push_back({g, std::move(m)});
  }
  std::map<std::vector<std::uint32_t>, std::size_t> row_of;
  std::vector<Poly> columns;
  for (const auto& u : unknowns) columns.push_back(poly_mul(Poly{{u.mono, Rational(1)}}, gens[u.gen]));
  for (const auto& col : columns)
    for (const auto& [e, c] : col) row_of.emplace(e, row_of.size());
  for (const auto& [e, c] : f)
    if (!row_of.count(e)) return std::nullopt;
  std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
  std::vector<Rational> b(row_of.size(), Rational(0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [e, c] : columns[j]) a[row_of[e]][j] = c;
  for (const auto& [e, c] : f) b[row_of[e]] = c;
  auto x = solve_dense(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  std::vector<Poly> h(gens.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    if ((*x)[j] != 0) h[unknowns[j].gen][unknowns[j].mono] = (*x)[j];
  return h;
}

}  // namespace divpoly::testing

namespace divpoly::testing {

std::vector<std::vector<std::vector<Rational>>> generalized_quaternion_constants(const Rational& a, const Rational& b) {
  // Basis elements as bit masks over the generators i (bit 0) and j (bit 1);
  // k = ij. Product of i^p j^q and i^r j^s is sign * i^(p+r) j^(q+s) after
  // moving j^q past i^r, with i^2 = a and j^2 = b.
  std::vector<std::vector<std::vector<Rational>>> c(4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4)));
  const int index_of[4] = {0, 1, 2, 3};  // masks 0:1, 1:i, 2:j, 3:k
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      const int p = s & 1, q = (s >> 1) & 1, r = t & 1, u = (t >> 1) & 1;
      Rational coef = (q && r) ? -1 : 1;
      if (p && r) coef *= a;
      if (q && u) coef *= b;
      const int mask = ((p + r) % 2) | (((q + u) % 2) << 1);
      c[s][t][index_of[mask]] = coef;
    }
  return c;
}

}  // namespace divpoly::testing
