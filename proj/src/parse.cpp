#include "divpoly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "divpoly/error.hpp"

namespace divpoly {

namespace {

struct Token {
  enum class Kind { Number, Symbol, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(ch)) {
      while (digit(i)) ++i;
      if (i < s.size() && s[i] == '/' && digit(i + 1)) {
        ++i;
        while (digit(i)) ++i;
      }
      out.push_back({Token::Kind::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Kind::Symbol, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Token::Kind kind;
    switch (ch) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '^': kind = Token::Kind::Caret; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      default:
        throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(i) + ": unexpected character '" +
                                                std::string(1, static_cast<char>(ch)) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(ch)), i});
    ++i;
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Token::Kind::End) fail("'+', '-', '*', '^' or end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const auto& t = peek();
    std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorKind::SyntaxError,
                "at offset " + std::to_string(t.offset) + ": expected " + expected + ", found " + found);
  }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t offset) {
    Expr e;
    e.kind = kind;
    e.offset = offset;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const auto& op = next();
      auto kind = op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = binary(kind, std::move(lhs), term(), op.offset);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Token::Kind::Star) {
      auto offset = next().offset;
      lhs = binary(Expr::Kind::Mul, std::move(lhs), factor(), offset);
    }
    return lhs;
  }

  Expr factor() {
    if (peek().kind == Token::Kind::Minus) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.offset = next().offset;
      e.args.push_back(factor());
      return e;
    }
    Expr base = atom();
    if (peek().kind != Token::Kind::Caret) return base;
    auto offset = next().offset;
    if (peek().kind != Token::Kind::Number || peek().text.find('/') != std::string::npos)
      fail("a nonnegative integer exponent");
    const auto& tok = next();
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.offset = offset;
    try {
      e.exponent = static_cast<unsigned>(std::stoul(tok.text));
    } catch (const std::exception&) {
      throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(tok.offset) + ": exponent too large");
    }
    e.args.push_back(std::move(base));
    return e;
  }

  Expr atom() {
    const auto& t = peek();
    switch (t.kind) {
      case Token::Kind::Number: {
        Expr e;
        e.kind = Expr::Kind::Number;
        e.offset = t.offset;
        e.value = parse_rational(t.text);
        next();
        return e;
      }
      case Token::Kind::Symbol: {
        Expr e;
        e.kind = Expr::Kind::Symbol;
        e.offset = t.offset;
        e.name = t.text;
        next();
        return e;
      }
      case Token::Kind::LParen: {
        next();
        Expr e = expr();
        if (peek().kind != Token::Kind::RParen) fail("')'");
        next();
        return e;
      }
      default:
        fail("a number, a symbol, '(' or '-'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::optional<std::size_t> label_index(const AlgebraSpec& spec, const std::string& name) {
  const auto& labels = spec.labels();
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::size_t parse_index(std::string_view digits) {
  if (digits.size() > 6) return 1000000;
  return static_cast<std::size_t>(std::stoul(std::string(digits)));
}

// x<i>, i >= 1
std::optional<std::size_t> variable_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || !all_digits(std::string_view(name).substr(1))) return std::nullopt;
  auto i = parse_index(std::string_view(name).substr(1));
  if (i == 0) return std::nullopt;
  return i;
}

// y<i>_<j>, i, j >= 1
std::optional<std::pair<std::size_t, std::size_t>> central_index(const std::string& name) {
  if (name.size() < 4 || name[0] != 'y') return std::nullopt;
  auto us = name.find('_');
  if (us == std::string::npos) return std::nullopt;
  auto a = std::string_view(name).substr(1, us - 1);
  auto b = std::string_view(name).substr(us + 1);
  if (!all_digits(a) || !all_digits(b)) return std::nullopt;
  auto i = parse_index(a), j = parse_index(b);
  if (i == 0 || j == 0) return std::nullopt;
  return std::make_pair(i, j);
}

template <typename F>
void visit_symbols(const Expr& e, F&& f) {
  if (e.kind == Expr::Kind::Symbol) f(e);
  for (const auto& a : e.args) visit_symbols(a, f);
}

[[noreturn]] void unknown(const Expr& e) {
  throw Error(ErrorKind::UnknownSymbol, "'" + e.name + "' at offset " + std::to_string(e.offset));
}

template <typename Poly, typename Leaf>
Poly lower(const Expr& e, const Poly& one, Leaf&& leaf) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.value * one;
    case Expr::Kind::Symbol: return leaf(e);
    case Expr::Kind::Add: return lower(e.args[0], one, leaf) + lower(e.args[1], one, leaf);
    case Expr::Kind::Sub: return lower(e.args[0], one, leaf) - lower(e.args[1], one, leaf);
    case Expr::Kind::Mul: return lower(e.args[0], one, leaf) * lower(e.args[1], one, leaf);
    case Expr::Kind::Neg: return Rational(-1) * lower(e.args[0], one, leaf);
    case Expr::Kind::Pow: {
      Poly base = lower(e.args[0], one, leaf);
      Poly r = one;
      for (unsigned k = 0; k < e.exponent; ++k) r = r * base;
      return r;
    }
  }
  return one;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::size_t max_variable(const Expr& e, const AlgebraSpec& spec) {
  std::size_t best = 0;
  visit_symbols(e, [&](const Expr& s) {
    if (label_index(spec, s.name)) return;
    if (auto i = variable_index(s.name)) best = std::max(best, *i);
  });
  return best;
}

std::size_t max_central_variable(const Expr& e, const AlgebraSpec& spec) {
  std::size_t best = 0;
  visit_symbols(e, [&](const Expr& s) {
    if (label_index(spec, s.name)) return;
    if (auto ij = central_index(s.name)) best = std::max(best, ij->first);
  });
  return best;
}

FreePoly lower_free(const Expr& e, const AlgebraPtr& spec, std::size_t nvars) {
  const FreePoly one = FreePoly::scalar(spec, nvars, 1);
  return lower(e, one, [&](const Expr& s) {
    if (auto b = label_index(*spec, s.name)) return FreePoly::constant(spec, nvars, spec->basis(*b));
    if (auto i = variable_index(s.name)) {
      if (*i > nvars)
        throw Error(ErrorKind::VariableOutOfRange,
                    "'" + s.name + "' at offset " + std::to_string(s.offset) + " with n=" + std::to_string(nvars));
      return FreePoly::variable(spec, nvars, *i - 1);
    }
    unknown(s);
  });
}

CentralPoly lower_central(const Expr& e, const AlgebraPtr& spec, std::size_t nvars) {
  const CentralPoly one = CentralPoly::constant(spec, nvars, spec->one());
  return lower(e, one, [&](const Expr& s) {
    if (auto b = label_index(*spec, s.name)) return CentralPoly::constant(spec, nvars, spec->basis(*b));
    if (auto ij = central_index(s.name)) {
      if (ij->first > nvars || ij->second > spec->dim())
        throw Error(ErrorKind::VariableOutOfRange,
                    "'" + s.name + "' at offset " + std::to_string(s.offset) + " with n=" + std::to_string(nvars));
      return CentralPoly::variable(spec, nvars, ij->first - 1, ij->second - 1);
    }
    unknown(s);
  });
}

FreePoly parse(std::string_view text, const AlgebraPtr& spec, std::size_t nvars) {
  return lower_free(parse_expr(text), spec, nvars);
}

CentralPoly parse_central(std::string_view text, const AlgebraPtr& spec, std::size_t nvars) {
  return lower_central(parse_expr(text), spec, nvars);
}

// ------------------------------------------------------------------ printing

namespace {

void append_term(std::string& out, const Rational& coef, const std::string& factors) {
  bool negative = sgn(coef) < 0;
  Rational mag = abs(coef);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (factors.empty())
    out += to_string(mag);
  else if (mag == 1)
    out += factors;
  else
    out += to_string(mag) + "*" + factors;
}

std::string monomial_text(const Monomial& mono, std::size_t m) {
  std::string s;
  for (std::size_t l = 0; l < mono.nvars(); ++l) {
    if (!mono.exps[l]) continue;
    if (!s.empty()) s += "*";
    s += "y" + std::to_string(l / m + 1) + "_" + std::to_string(l % m + 1);
    if (mono.exps[l] > 1) s += "^" + std::to_string(mono.exps[l]);
  }
  return s;
}

std::size_t single_coordinate(const AlgebraElement& a) {
  std::size_t idx = a.coords.size(), count = 0;
  for (std::size_t s = 0; s < a.coords.size(); ++s)
    if (!is_zero(a.coords[s])) {
      idx = s;
      ++count;
    }
  return count == 1 ? idx : a.coords.size();
}

}  // namespace

std::string to_string(const AlgebraElement& a, const AlgebraSpec& spec) {
  std::string out;
  for (std::size_t s = 0; s < a.coords.size(); ++s) {
    if (is_zero(a.coords[s])) continue;
    append_term(out, a.coords[s], s == 0 ? "" : spec.labels()[s]);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const FreePoly& p) {
  const auto& labels = p.algebra().labels();
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    std::string factors;
    auto push = [&](const std::string& f) {
      if (!factors.empty()) factors += "*";
      factors += f;
    };
    for (std::size_t r = 0; r <= w.degree(); ++r) {
      if (w.basis(r) != 0) push(labels[w.basis(r)]);
      if (r < w.degree()) push("x" + std::to_string(w.var(r) + 1));
    }
    append_term(out, c, factors);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const CentralPoly& p) {
  const auto& spec = p.algebra();
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    std::string vars = monomial_text(mono, spec.dim());
    auto s = single_coordinate(c);
    if (s < c.coords.size()) {
      std::string factors = s == 0 ? "" : spec.labels()[s];
      if (!vars.empty()) factors += (factors.empty() ? "" : "*") + vars;
      append_term(out, c.coords[s], factors);
    } else {
      std::string factors = "(" + to_string(c, spec) + ")";
      if (!vars.empty()) factors += "*" + vars;
      append_term(out, 1, factors);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const ScalarPoly& p, std::size_t m) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    append_term(out, it->second, monomial_text(it->first, m));
  return out.empty() ? "0" : out;
}

}  // namespace divpoly
