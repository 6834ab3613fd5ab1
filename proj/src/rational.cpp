#include "divpoly/rational.hpp"

#include <cctype>

#include "divpoly/error.hpp"

namespace divpoly {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnitMissing: return "UnitMissing";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::DimensionOne: return "DimensionOne";
    case ErrorKind::LemmaMatrixSingular: return "LemmaMatrixSingular";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotQuaternionAmbient: return "NotQuaternionAmbient";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAnIdentity: return "NotAnIdentity";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorKind::InvalidFormat: return "InvalidFormat";
  }
  return "UnknownError";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::InvalidFormat, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw Error(ErrorKind::InvalidFormat, "not a rational: '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::InvalidFormat, "not a rational: '" + std::string(text) + "'");
  return make_rational(parse_integer(num), parse_integer(den));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace divpoly
