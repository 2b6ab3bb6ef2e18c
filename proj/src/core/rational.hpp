#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pforge {

// Canonical reduced rational (positive denominator) backed by GMP.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

// Parses "p", "-p", "p/q". Throws pforge::Error(ErrorCode::Parse) on bad input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Vector& v)
{
  for (const auto& x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& a);
Rational dot(const Vector& a, const Vector& b);

}  // namespace pforge
