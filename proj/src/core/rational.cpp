#include "rational.hpp"

#include "errors.hpp"

#include <cctype>

namespace pforge {

namespace {

bool valid_integer(std::string_view s)
{
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

Integer parse_integer(std::string_view s)
{
  if (s[0] == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw Error(ErrorCode::Parse, "invalid rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0)
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r)
{
  return r.get_str(10);
}

Vector zeros(std::size_t n)
{
  return Vector(n, Rational(0));
}

Vector unit_vector(std::size_t n, std::size_t i)
{
  Vector v = zeros(n);
  v[i] = 1;
  return v;
}

Vector add(const Vector& a, const Vector& b)
{
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

Vector scale(const Rational& s, const Vector& a)
{
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = s * a[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b)
{
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

const char* error_code_name(ErrorCode code)
{
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::Parse: return "Parse";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::NotASubalgebra: return "NotASubalgebra";
  case ErrorCode::TorsionNonzero: return "TorsionNonzero";
  case ErrorCode::IrrationalSpectrum: return "IrrationalSpectrum";
  case ErrorCode::Singular: return "Singular";
  case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
  case ErrorCode::NotARepresentation: return "NotARepresentation";
  case ErrorCode::NotDirectSum: return "NotDirectSum";
  case ErrorCode::InvalidStructureConstants: return "InvalidStructureConstants";
  case ErrorCode::JacobiFailure: return "JacobiFailure";
  case ErrorCode::DuplicateEigenvalue: return "DuplicateEigenvalue";
  case ErrorCode::PairwiseSumNotSubalgebra: return "PairwiseSumNotSubalgebra";
  case ErrorCode::NotACasimir: return "NotACasimir";
  case ErrorCode::ZeroParameter: return "ZeroParameter";
  case ErrorCode::UnknownName: return "UnknownName";
  case ErrorCode::StabilizerNotClosed: return "StabilizerNotClosed";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pforge
