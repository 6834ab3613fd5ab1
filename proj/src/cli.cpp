#include "divpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "divpoly/error.hpp"
#include "divpoly/nullstellensatz.hpp"
#include "divpoly/parse.hpp"
#include "divpoly/serialize.hpp"
#include "divpoly/transport.hpp"

namespace divpoly {

namespace {

constexpr const char* kGrammar = R"(Expressions:
  expr   := term (('+'|'-') term)*
  term   := factor ('*' factor)*
  factor := '-' factor | atom ('^' uint)?
  atom   := rational | symbol | '(' expr ')'
Multiplication is noncommutative and must be written explicitly. '^' binds
tighter than unary minus, which binds tighter than '*', so -x1^2 is -(x1^2).
Symbols are the algebra labels (1 i j k for the quaternions, e1..em for a
custom algebra without labels), variables x1..xn, and in central expressions
y<i>_<j>. Rationals are written p/q.
Exit status: 0 success or true, 1 false or domain error, 2 usage error.)";

struct Options {
  std::string algebra;
  std::optional<std::size_t> n;
  bool json = false;
};

struct Session {
  Options opts;
  AlgebraPtr spec;
  std::ostream& out;

  std::size_t nvars_for(const std::vector<std::string>& texts, std::size_t at_least = 0) const {
    if (opts.n) return *opts.n;
    std::size_t n = at_least;
    for (const auto& t : texts) n = std::max(n, max_variable(parse_expr(t), *spec));
    return n;
  }

  std::size_t central_nvars_for(const std::string& text) const {
    if (opts.n) return *opts.n;
    return max_central_variable(parse_expr(text), *spec);
  }

  int print_bool(bool value, const char* key) const {
    if (opts.json)
      out << Json{{key, value}}.dump() << '\n';
    else
      out << (value ? "true" : "false") << '\n';
    return value ? 0 : 1;
  }
};

// "x<i>=EXPR" with EXPR constant; returns (i-1, value).
std::pair<std::size_t, AlgebraElement> parse_assignment(const std::string& text, const AlgebraPtr& spec) {
  auto eq = text.find('=');
  if (eq == std::string::npos)
    throw Error(ErrorKind::SyntaxError, "expected x<i>=EXPR, found '" + text + "'");
  std::string lhs = text.substr(0, eq);
  lhs.erase(std::remove(lhs.begin(), lhs.end(), ' '), lhs.end());
  if (lhs.size() < 2 || lhs[0] != 'x' || !std::all_of(lhs.begin() + 1, lhs.end(), ::isdigit) || lhs[1] == '0')
    throw Error(ErrorKind::UnknownSymbol, "'" + lhs + "' is not a variable");
  const std::size_t index = std::stoul(lhs.substr(1)) - 1;
  FreePoly value = parse(text.substr(eq + 1), spec, 0);
  return {index, fp_eval(value, Point{})};
}

Point parse_point(const std::vector<std::string>& assignments, const AlgebraPtr& spec, std::size_t nvars) {
  std::vector<std::optional<AlgebraElement>> slots(nvars);
  for (const auto& a : assignments) {
    auto [index, value] = parse_assignment(a, spec);
    if (index >= nvars)
      throw Error(ErrorKind::VariableOutOfRange, "x" + std::to_string(index + 1) + " exceeds n = " + std::to_string(nvars));
    slots[index] = std::move(value);
  }
  Point p;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!slots[i]) throw Error(ErrorKind::LengthMismatch, "no value given for x" + std::to_string(i + 1));
    p.coords.push_back(*slots[i]);
  }
  return p;
}

std::size_t max_assigned(const std::vector<std::string>& assignments, const AlgebraPtr& spec) {
  std::size_t n = 0;
  for (const auto& a : assignments) n = std::max(n, parse_assignment(a, spec).first + 1);
  return n;
}

std::string point_text(const Point& p, const AlgebraSpec& spec) {
  std::string s;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ", ";
    s += "x" + std::to_string(i + 1) + " = " + to_string(p.coords[i], spec);
  }
  return s;
}

Json element_json(const AlgebraElement& a) {
  Json j = Json::array();
  for (const auto& c : a.coords) j.push_back(rational_to_json(c));
  return j;
}

const char* family_name(GpiFamily f) {
  switch (f) {
    case GpiFamily::Commute: return "commute";
    case GpiFamily::Sort: return "sort";
    case GpiFamily::Substitute: return "substitute";
  }
  return "";
}

IdealHandle load_ideal(const std::string& path, const AlgebraPtr& spec) {
  return ideal_from_json(read_json_file(path), spec);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial functions over division algebras", "divpoly"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::size_t n_value = 0;
  app.add_option("--algebra", opts.algebra, "Algebra spec file (default: quaternion)");
  auto* n_opt = app.add_option("-n", n_value, "Number of variables (default: inferred)");
  app.add_flag("--json", opts.json, "Print machine-readable JSON");

  std::string expr, file, ideal_file, cert_file, points_file, out_file;
  std::vector<std::string> at, gens;

  auto* normalize = app.add_subcommand("normalize", "Print the central form phi(EXPR)");
  normalize->add_option("EXPR", expr)->required();
  auto* phi_cmd = app.add_subcommand("phi", "Print phi(EXPR) in D_c[y]");
  phi_cmd->add_option("EXPR", expr)->required();
  auto* identity = app.add_subcommand("identity", "Test whether EXPR vanishes on all of D^n");
  identity->add_option("EXPR", expr)->required();
  auto* eval = app.add_subcommand("eval", "Evaluate EXPR at a point");
  eval->add_option("EXPR", expr)->required();
  eval->add_option("--at", at, "Assignments x<i>=EXPR")->required();
  auto* conj = app.add_subcommand("conj", "Quaternionic conjugate of EXPR");
  conj->add_option("EXPR", expr)->required();
  auto* norm = app.add_subcommand("norm", "EXPR times its conjugate");
  norm->add_option("EXPR", expr)->required();
  auto* psi_cmd = app.add_subcommand("psi", "Map a central expression in y<i>_<j> back to the free product");
  psi_cmd->add_option("CEXPR", expr)->required();
  auto* coord = app.add_subcommand("coord-table", "Print the coordinate functionals Y_1..Y_m");
  auto* gpi_gens = app.add_subcommand("gpi-gens", "List generators of the identity kernel");
  auto* gpi_cert = app.add_subcommand("gpi-cert", "Write a membership certificate for an identity");
  gpi_cert->add_option("EXPR", expr)->required();
  gpi_cert->add_option("-o", out_file, "Output file")->required();
  auto* gpi_verify = app.add_subcommand("gpi-verify", "Check a certificate file");
  gpi_verify->add_option("FILE", file)->required();
  auto* ideal_cmd = app.add_subcommand("ideal", "Ideal files");
  ideal_cmd->require_subcommand(1);
  auto* ideal_make = ideal_cmd->add_subcommand("make", "Build an ideal from generators");
  ideal_make->add_option("-g", gens, "Generator expressions")->required();
  ideal_make->add_option("-o", out_file, "Output file")->required();
  auto* member_cmd = app.add_subcommand("member", "Test EXPR for membership in an ideal");
  member_cmd->add_option("EXPR", expr)->required();
  member_cmd->add_option("--ideal", ideal_file)->required();
  auto* radical = app.add_subcommand("radical-verify", "Check a radical-membership certificate");
  radical->add_option("--ideal", ideal_file)->required();
  radical->add_option("--cert", cert_file)->required();
  auto* vanish = app.add_subcommand("vanish", "Test whether an ideal vanishes at a point");
  vanish->add_option("--ideal", ideal_file)->required();
  vanish->add_option("--at", at, "Assignments x<i>=EXPR")->required();
  auto* scan = app.add_subcommand("scan", "List the candidate points in the zero locus");
  scan->add_option("--ideal", ideal_file)->required();
  scan->add_option("--points", points_file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (n_opt->count() > 0) opts.n = n_value;

  try {
    Session s{opts, load_algebra(opts.algebra), out};
    const auto& spec = s.spec;

    if (normalize->parsed() || phi_cmd->parsed()) {
      CentralPoly q = phi(parse(expr, spec, s.nvars_for({expr})));
      out << (opts.json ? centralpoly_to_json(q).dump() : to_string(q)) << '\n';
      return 0;
    }
    if (identity->parsed()) return s.print_bool(is_identity(parse(expr, spec, s.nvars_for({expr}))), "identity");
    if (eval->parsed()) {
      const std::size_t n = s.nvars_for({expr}, max_assigned(at, spec));
      AlgebraElement v = fp_eval(parse(expr, spec, n), parse_point(at, spec, n));
      out << (opts.json ? element_json(v).dump() : to_string(v, *spec)) << '\n';
      return 0;
    }
    if (conj->parsed() || norm->parsed()) {
      FreePoly p = parse(expr, spec, s.nvars_for({expr}));
      FreePoly r = conj->parsed() ? fp_conj(p) : fp_norm(p);
      out << (opts.json ? Json{{"n", r.nvars()}, {"terms", freepoly_to_json(r)}}.dump() : to_string(r)) << '\n';
      return 0;
    }
    if (psi_cmd->parsed()) {
      FreePoly r = psi(parse_central(expr, spec, s.central_nvars_for(expr)));
      out << (opts.json ? Json{{"n", r.nvars()}, {"terms", freepoly_to_json(r)}}.dump() : to_string(r)) << '\n';
      return 0;
    }
    if (coord->parsed()) {
      CoordTable table = coordinate_functionals(*spec);
      const std::size_t m = spec->dim();
      Json j = Json::array();
      for (std::size_t i = 0; i < m; ++i) {
        FreePoly y = make_Y(spec, table, 1, 0, i);
        if (opts.json) {
          Json b = Json::array();
          for (std::size_t a = 0; a < m; ++a) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m; ++c) row.push_back(rational_to_json(table(i, a, c)));
            b.push_back(std::move(row));
          }
          j.push_back(Json{{"coordinate", i + 1}, {"table", std::move(b)}, {"text", to_string(y)}});
        } else {
          out << "Y" << i + 1 << " = " << to_string(y) << '\n';
        }
      }
      if (opts.json) out << j.dump() << '\n';
      return 0;
    }
    if (gpi_gens->parsed()) {
      GpiGeneratorSet set = gpi_generators(spec, opts.n.value_or(1));
      Json j = Json::array();
      for (std::size_t k = 0; k < set.size(); ++k) {
        const auto& g = set.generators[k];
        if (opts.json) {
          std::vector<std::size_t> idx;
          for (auto v : g.indices) idx.push_back(v + 1);
          j.push_back(Json{{"index", k + 1},
                           {"family", family_name(g.family)},
                           {"indices", idx},
                           {"label", g.label},
                           {"terms", freepoly_to_json(g.element)}});
        } else {
          out << g.label << '\n';
        }
      }
      if (opts.json) out << j.dump() << '\n';
      return 0;
    }
    if (gpi_cert->parsed()) {
      GpiCertificate c = gpi_certificate(parse(expr, spec, s.nvars_for({expr})));
      write_json_file(out_file, certificate_to_json(c));
      if (opts.json)
        out << Json{{"file", out_file}, {"steps", c.steps.size()}}.dump() << '\n';
      else
        out << "wrote " << c.steps.size() << " steps to " << out_file << '\n';
      return 0;
    }
    if (gpi_verify->parsed())
      return s.print_bool(verify_certificate(certificate_from_json(read_json_file(file), spec)), "valid");
    if (ideal_make->parsed()) {
      const std::size_t n = s.nvars_for(gens);
      std::vector<FreePoly> polys;
      for (const auto& g : gens) polys.push_back(parse(g, spec, n));
      IdealHandle ideal = make_ideal(spec, n, polys);
      write_json_file(out_file, ideal_to_json(ideal));
      if (opts.json) {
        out << ideal_to_json(ideal).dump() << '\n';
      } else {
        for (const auto& g : ideal.gb.generators) out << to_string(g, spec->dim()) << '\n';
      }
      return 0;
    }
    if (member_cmd->parsed()) {
      IdealHandle ideal = load_ideal(ideal_file, spec);
      return s.print_bool(member(parse(expr, spec, ideal.nvars), ideal), "member");
    }
    if (radical->parsed()) {
      IdealHandle ideal = load_ideal(ideal_file, spec);
      RadicalCertificate c = radical_certificate_from_json(read_json_file(cert_file), spec, ideal.nvars);
      return s.print_bool(verify_radical_certificate(c, ideal), "valid");
    }
    if (vanish->parsed()) {
      IdealHandle ideal = load_ideal(ideal_file, spec);
      return s.print_bool(vanishes(ideal, parse_point(at, spec, ideal.nvars)), "vanishes");
    }
    if (scan->parsed()) {
      IdealHandle ideal = load_ideal(ideal_file, spec);
      std::vector<Point> candidates = points_from_json(read_json_file(points_file), *spec, ideal.nvars);
      Json j = Json::array();
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (!vanishes(ideal, candidates[k])) continue;
        if (opts.json)
          j.push_back(Json{{"index", k + 1}, {"point", point_to_json(candidates[k])}});
        else
          out << k + 1 << ": " << point_text(candidates[k], *spec) << '\n';
      }
      if (opts.json) out << j.dump() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace divpoly
