#include "divpoly/serialize.hpp"

#include <fstream>

#include "divpoly/error.hpp"

namespace divpoly {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidFormat, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, std::size_t limit, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " index must be an integer");
  auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > limit) bad(std::string(what) + " index out of range");
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  bad("rational must be a \"p/q\" string or an integer");
}

Json algebra_to_json(const AlgebraSpec& spec) {
  Json constants = Json::array();
  for (const auto& plane : spec.constants()) {
    Json rows = Json::array();
    for (const auto& row : plane) {
      Json r = Json::array();
      for (const auto& c : row) r.push_back(rational_to_json(c));
      rows.push_back(std::move(r));
    }
    constants.push_back(std::move(rows));
  }
  return Json{{"m", spec.dim()}, {"labels", spec.labels()}, {"constants", std::move(constants)}};
}

AlgebraPtr algebra_from_json(const Json& j) {
  const auto& mj = field(j, "m");
  if (!mj.is_number_integer() || mj.get<long long>() < 1) bad("'m' must be a positive integer");
  const auto m = static_cast<std::size_t>(mj.get<long long>());
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t s = 0; s < m; ++s) labels.push_back("e" + std::to_string(s + 1));
  }
  StructureConstants c;
  const auto& cj = field(j, "constants");
  if (!cj.is_array()) bad("'constants' must be an array");
  for (const auto& plane : cj) {
    if (!plane.is_array()) bad("'constants' must be m x m x m");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : plane) {
      if (!row.is_array()) bad("'constants' must be m x m x m");
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      rows.push_back(std::move(r));
    }
    c.push_back(std::move(rows));
  }
  return make_algebra(m, std::move(c), std::move(labels));
}

AlgebraPtr load_algebra(const std::string& path) {
  if (path.empty() || path == "quaternion") return quaternion_algebra();
  return algebra_from_json(read_json_file(path));
}

Json freepoly_to_json(const FreePoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json basis = Json::array(), vars = Json::array();
    for (std::size_t r = 0; r <= w.degree(); ++r) basis.push_back(w.basis(r) + 1);
    for (std::size_t r = 0; r < w.degree(); ++r) vars.push_back(w.var(r) + 1);
    terms.push_back(Json{{"coef", rational_to_json(c)}, {"basis", std::move(basis)}, {"vars", std::move(vars)}});
  }
  return terms;
}

FreePoly freepoly_from_json(const Json& j, const AlgebraPtr& spec, std::size_t nvars) {
  if (!j.is_array()) bad("a polynomial is an array of terms");
  FreePoly p(spec, nvars);
  for (const auto& t : j) {
    const auto& bj = field(t, "basis");
    const auto& vj = field(t, "vars");
    if (!bj.is_array() || !vj.is_array() || bj.size() != vj.size() + 1) bad("a term needs k+1 basis and k variable indices");
    std::vector<std::uint16_t> basis, vars;
    for (const auto& b : bj) basis.push_back(static_cast<std::uint16_t>(index_from_json(b, spec->dim(), "basis")));
    for (const auto& v : vj) vars.push_back(static_cast<std::uint16_t>(index_from_json(v, nvars, "variable")));
    p.add_term(Word(basis, vars), rational_from_json(field(t, "coef")));
  }
  return p;
}

Json scalarpoly_to_json(const ScalarPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"coef", rational_to_json(it->second)}, {"exp", it->first.exps}});
  return terms;
}

ScalarPoly scalarpoly_from_json(const Json& j, std::size_t ncentral) {
  if (!j.is_array()) bad("a polynomial is an array of terms");
  ScalarPoly p(ncentral);
  for (const auto& t : j) {
    const auto& ej = field(t, "exp");
    if (!ej.is_array() || ej.size() != ncentral) bad("exponent vector has the wrong length");
    Monomial mono(ncentral);
    for (std::size_t k = 0; k < ncentral; ++k) {
      if (!ej[k].is_number_integer() || ej[k].get<long long>() < 0) bad("exponents are nonnegative integers");
      mono.exps[k] = static_cast<std::uint32_t>(ej[k].get<long long>());
    }
    p.add_term(mono, rational_from_json(field(t, "coef")));
  }
  return p;
}

Json centralpoly_to_json(const CentralPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json coef = Json::array();
    for (const auto& c : it->second.coords) coef.push_back(rational_to_json(c));
    terms.push_back(Json{{"coef", std::move(coef)}, {"exp", it->first.exps}});
  }
  return terms;
}

Json certificate_to_json(const GpiCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back(
        Json{{"left", freepoly_to_json(s.left)}, {"gen", s.generator + 1}, {"right", freepoly_to_json(s.right)}});
  return Json{{"n", c.target.nvars()}, {"target", freepoly_to_json(c.target)}, {"steps", std::move(steps)}};
}

GpiCertificate certificate_from_json(const Json& j, const AlgebraPtr& spec) {
  const auto& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 0) bad("'n' must be a nonnegative integer");
  const auto n = static_cast<std::size_t>(nj.get<long long>());
  GpiCertificate c{freepoly_from_json(field(j, "target"), spec, n), {}};
  const auto& sj = field(j, "steps");
  if (!sj.is_array()) bad("'steps' must be an array");
  for (const auto& s : sj) {
    const auto& g = field(s, "gen");
    if (!g.is_number_integer() || g.get<long long>() < 1) bad("'gen' must be a positive integer");
    c.steps.push_back({freepoly_from_json(field(s, "left"), spec, n), static_cast<std::size_t>(g.get<long long>() - 1),
                       freepoly_from_json(field(s, "right"), spec, n)});
  }
  return c;
}

Json ideal_to_json(const IdealHandle& ideal) {
  Json gens = Json::array(), scalars = Json::array(), gb = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(freepoly_to_json(g));
  for (const auto& g : ideal.scalar_generators) scalars.push_back(scalarpoly_to_json(g));
  for (const auto& g : ideal.gb.generators) gb.push_back(scalarpoly_to_json(g));
  return Json{{"n", ideal.nvars}, {"generators", std::move(gens)}, {"scalar_generators", std::move(scalars)},
              {"groebner", std::move(gb)}};
}

IdealHandle ideal_from_json(const Json& j, const AlgebraPtr& spec) {
  const auto& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 0) bad("'n' must be a nonnegative integer");
  const auto n = static_cast<std::size_t>(nj.get<long long>());
  std::vector<FreePoly> gens;
  const auto& gj = field(j, "generators");
  if (!gj.is_array()) bad("'generators' must be an array");
  for (const auto& g : gj) gens.push_back(freepoly_from_json(g, spec, n));
  IdealHandle ideal = make_ideal(spec, n, gens);
  const std::size_t ncentral = n * spec->dim();
  if (j.contains("scalar_generators")) {
    std::vector<ScalarPoly> stored;
    for (const auto& s : j.at("scalar_generators")) stored.push_back(scalarpoly_from_json(s, ncentral));
    if (stored != ideal.scalar_generators) bad("cached scalar generators do not match the generators");
  }
  if (j.contains("groebner")) {
    std::vector<ScalarPoly> stored;
    for (const auto& s : j.at("groebner")) stored.push_back(scalarpoly_from_json(s, ncentral));
    if (stored != ideal.gb.generators) bad("cached Groebner basis does not match the generators");
  }
  return ideal;
}

Json radical_certificate_to_json(const RadicalCertificate& c) {
  Json w = Json::array();
  for (const auto& f : c.witnesses) w.push_back(freepoly_to_json(f));
  return Json{{"f", freepoly_to_json(c.f)}, {"m", c.m}, {"witnesses", std::move(w)}};
}

RadicalCertificate radical_certificate_from_json(const Json& j, const AlgebraPtr& spec, std::size_t nvars) {
  const auto& mj = field(j, "m");
  if (!mj.is_number_integer()) bad("'m' must be an integer");
  auto m = mj.get<long long>();
  if (m < 1) throw Error(ErrorKind::BadExponent, "the exponent m must be at least 1");
  RadicalCertificate c{freepoly_from_json(field(j, "f"), spec, nvars), static_cast<unsigned>(m), {}};
  if (j.contains("witnesses")) {
    if (!j.at("witnesses").is_array()) bad("'witnesses' must be an array");
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(freepoly_from_json(w, spec, nvars));
  }
  return c;
}

std::vector<Point> points_from_json(const Json& j, const AlgebraSpec& spec, std::size_t nvars) {
  if (!j.is_array()) bad("points file must be an array of points");
  std::vector<Point> points;
  for (const auto& pj : j) {
    if (!pj.is_array() || pj.size() != nvars) bad("each point needs " + std::to_string(nvars) + " coordinates");
    Point p;
    for (const auto& qj : pj) {
      if (!qj.is_array() || qj.size() != spec.dim()) bad("each coordinate needs " + std::to_string(spec.dim()) + " entries");
      AlgebraElement a = spec.zero();
      for (std::size_t s = 0; s < spec.dim(); ++s) a.coords[s] = rational_from_json(qj[s]);
      p.coords.push_back(std::move(a));
    }
    points.push_back(std::move(p));
  }
  return points;
}

Json point_to_json(const Point& a) {
  Json out = Json::array();
  for (const auto& q : a.coords) {
    Json c = Json::array();
    for (const auto& v : q.coords) c.push_back(rational_to_json(v));
    out.push_back(std::move(c));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace divpoly
