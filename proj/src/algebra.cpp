#include "divpoly/algebra.hpp"

#include <string>

#include "divpoly/error.hpp"

namespace divpoly {

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords)
    if (!divpoly::is_zero(c)) return false;
  return true;
}

namespace {

void check_same_length(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.coords.size() != b.coords.size())
    throw Error(ErrorKind::DimensionMismatch, "algebra elements of different dimension");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  r += b;
  return r;
}

AlgebraElement& operator+=(AlgebraElement& a, const AlgebraElement& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
  return a;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_length(a, b);
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

AlgebraElement operator*(const Rational& q, const AlgebraElement& a) {
  AlgebraElement r = a;
  for (auto& c : r.coords) c *= q;
  return r;
}

AlgebraSpec::AlgebraSpec(std::size_t m, StructureConstants c, std::vector<std::string> labels)
    : m_(m), c_(std::move(c)), labels_(std::move(labels)), sparse_(m * m) {
  for (std::size_t s = 0; s < m_; ++s)
    for (std::size_t t = 0; t < m_; ++t)
      for (std::size_t u = 0; u < m_; ++u)
        if (!divpoly::is_zero(c_[s][t][u])) sparse_[s * m_ + t].push_back({u, c_[s][t][u]});
  quaternion_ = (m_ == 4 && c_ == quaternion_constants());
}

AlgebraElement AlgebraSpec::zero() const { return AlgebraElement{std::vector<Rational>(m_)}; }

AlgebraElement AlgebraSpec::basis(std::size_t s) const {
  if (s >= m_) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(s + 1));
  AlgebraElement e = zero();
  e.coords[s] = 1;
  return e;
}

AlgebraElement AlgebraSpec::scalar(const Rational& q) const {
  AlgebraElement e = zero();
  e.coords[0] = q;
  return e;
}

StructureConstants quaternion_constants() {
  StructureConstants c(4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4)));
  // index: 0 = 1, 1 = i, 2 = j, 3 = k
  auto set = [&](int s, int t, int u, int sign) { c[s][t][u] = sign; };
  for (int t = 0; t < 4; ++t) {
    set(0, t, t, 1);
    set(t, 0, t, 1);
  }
  set(1, 1, 0, -1);
  set(2, 2, 0, -1);
  set(3, 3, 0, -1);
  set(1, 2, 3, 1);   // ij = k
  set(2, 3, 1, 1);   // jk = i
  set(3, 1, 2, 1);   // ki = j
  set(2, 1, 3, -1);  // ji = -k
  set(3, 2, 1, -1);  // kj = -i
  set(1, 3, 2, -1);  // ik = -j
  return c;
}

Matrix lemma_matrix(std::size_t m, const StructureConstants& c) {
  Matrix mat(m * m, m * m);
  // v_s v_w v_t = sum_p c[s][w][p] v_p v_t = sum_{p,u} c[s][w][p] c[p][t][u] v_u
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t p = 0; p < m; ++p) {
          if (is_zero(c[s][w][p])) continue;
          for (std::size_t u = 0; u < m; ++u)
            if (!is_zero(c[p][t][u])) mat(u * m + w, s * m + t) += c[s][w][p] * c[p][t][u];
        }
  return mat;
}

std::size_t center_dimension(std::size_t m, const StructureConstants& c) {
  // rows (s, u): coordinate u of v_s x - x v_s; columns: coordinates of x
  Matrix comm(m * m, m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t u = 0; u < m; ++u) comm(s * m + u, w) = c[s][w][u] - c[w][s][u];
  return kernel(comm).size();
}

AlgebraPtr make_algebra(std::size_t m, StructureConstants c, std::vector<std::string> labels) {
  if (c.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "structure constants must be m x m x m");
  for (const auto& row : c) {
    if (row.size() != m) throw Error(ErrorKind::DimensionMismatch, "structure constants must be m x m x m");
    for (const auto& col : row)
      if (col.size() != m) throw Error(ErrorKind::DimensionMismatch, "structure constants must be m x m x m");
  }
  if (labels.empty()) {
    for (std::size_t s = 0; s < m; ++s) labels.push_back("e" + std::to_string(s + 1));
  }
  if (labels.size() != m) throw Error(ErrorKind::DimensionMismatch, "one label per basis element");
  if (m <= 1) throw Error(ErrorKind::DimensionOne, "dimension over the center must exceed 1");

  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t u = 0; u < m; ++u) {
      Rational delta = (t == u) ? 1 : 0;
      if (c[0][t][u] != delta || c[t][0][u] != delta)
        throw Error(ErrorKind::UnitMissing,
                    "v1 is not a two-sided identity (fails at v" + std::to_string(t + 1) + ")");
    }

  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t w = 0; w < m; ++w) {
          Rational lhs, rhs;
          for (std::size_t u = 0; u < m; ++u) {
            lhs += c[s][t][u] * c[u][r][w];
            rhs += c[t][r][u] * c[s][u][w];
          }
          if (lhs != rhs)
            throw Error(ErrorKind::NotAssociative, "(v" + std::to_string(s + 1) + " v" + std::to_string(t + 1) +
                                                       ") v" + std::to_string(r + 1) + " differs from v" +
                                                       std::to_string(s + 1) + " (v" + std::to_string(t + 1) +
                                                       " v" + std::to_string(r + 1) + ")");
        }

  if (auto d = center_dimension(m, c); d != 1)
    throw Error(ErrorKind::NotCentral, "center has dimension " + std::to_string(d));

  if (determinant(lemma_matrix(m, c)) == 0)
    throw Error(ErrorKind::LemmaMatrixSingular, "the maps x -> v_s x v_t do not span End(D)");

  return AlgebraPtr(new AlgebraSpec(m, std::move(c), std::move(labels)));
}

AlgebraPtr quaternion_algebra() {
  static const AlgebraPtr h = make_algebra(4, quaternion_constants(), {"1", "i", "j", "k"});
  return h;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b, const AlgebraSpec& spec) {
  const std::size_t m = spec.dim();
  if (a.coords.size() != m || b.coords.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "element does not belong to the algebra");
  AlgebraElement r = spec.zero();
  for (std::size_t s = 0; s < m; ++s) {
    if (is_zero(a.coords[s])) continue;
    for (std::size_t t = 0; t < m; ++t) {
      if (is_zero(b.coords[t])) continue;
      Rational ab = a.coords[s] * b.coords[t];
      for (const auto& p : spec.product(s, t)) r.coords[p.index] += ab * p.coef;
    }
  }
  return r;
}

AlgebraElement inverse(const AlgebraElement& a, const AlgebraSpec& spec) {
  const std::size_t m = spec.dim();
  if (a.coords.size() != m) throw Error(ErrorKind::DimensionMismatch, "element does not belong to the algebra");
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "zero has no inverse");
  // column t of L is a * v_t
  Matrix left(m, m);
  for (std::size_t s = 0; s < m; ++s) {
    if (is_zero(a.coords[s])) continue;
    for (std::size_t t = 0; t < m; ++t)
      for (const auto& p : spec.product(s, t)) left(p.index, t) += a.coords[s] * p.coef;
  }
  auto x = solve(std::move(left), spec.one().coords);
  if (!x) throw Error(ErrorKind::ZeroDivisor, "left multiplication is singular");
  AlgebraElement b{std::move(*x)};
  if (mul(b, a, spec) != spec.one()) throw Error(ErrorKind::ZeroDivisor, "no two-sided inverse");
  return b;
}

AlgebraElement conjugate(const AlgebraElement& a, const AlgebraSpec& spec) {
  if (!spec.is_quaternion()) throw Error(ErrorKind::NotQuaternionAmbient, "conjugation needs the quaternions");
  if (a.coords.size() != 4) throw Error(ErrorKind::DimensionMismatch, "element does not belong to the algebra");
  AlgebraElement r = a;
  for (std::size_t s = 1; s < 4; ++s) r.coords[s] = -r.coords[s];
  return r;
}

CoordTable coordinate_functionals(const AlgebraSpec& spec) {
  const std::size_t m = spec.dim();
  Matrix lm = lemma_matrix(spec);
  CoordTable table(m);
  for (std::size_t i = 0; i < m; ++i) {
    // x -> x_i v_1 sends v_w to delta_{w,i} v_1
    std::vector<Rational> rhs(m * m);
    rhs[0 * m + i] = 1;
    auto b = solve(lm, std::move(rhs));
    if (!b) throw Error(ErrorKind::LemmaMatrixSingular, "coordinate functionals do not exist");
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) table(i, s, t) = (*b)[s * m + t];
  }
  return table;
}

AlgebraElement apply_functional(const CoordTable& table, std::size_t i, const AlgebraElement& x,
                                const AlgebraSpec& spec) {
  const std::size_t m = spec.dim();
  AlgebraElement r = spec.zero();
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      if (is_zero(table(i, s, t))) continue;
      r += table(i, s, t) * mul(mul(spec.basis(s), x, spec), spec.basis(t), spec);
    }
  return r;
}

}  // namespace divpoly
