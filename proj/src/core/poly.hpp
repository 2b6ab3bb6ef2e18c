#pragma once

#include "rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace pforge {

using Monomial = std::vector<std::uint32_t>;

// Total degree first, then lexicographic on the exponent vector.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial with rational coefficients in a fixed number of variables.
// Zero coefficients are never stored.
class MultiPoly {
public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  // sum_i coeffs[i] x_i
  static MultiPoly linear(const Vector& coeffs);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  unsigned total_degree() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b)
  {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly derivative(std::size_t var) const;
  Rational evaluate(const Vector& point) const;

  // Coefficient of var^power, as a polynomial in the remaining nvars - 1 variables.
  MultiPoly coefficient(std::size_t var, unsigned power) const;
  // Drops terms whose degree in var exceeds max_degree.
  MultiPoly truncate(std::size_t var, unsigned max_degree) const;
  // Substitutes x_i -> images[i]; all images share one variable count.
  MultiPoly compose(const std::vector<MultiPoly>& images) const;
  // Embeds into a larger variable set, appending `extra` unused variables.
  MultiPoly extend(std::size_t extra) const;

private:
  std::size_t nvars_;
  Terms terms_;
};

// Square matrix with polynomial entries.
class PolyMatrix {
public:
  PolyMatrix(std::size_t n, std::size_t nvars);

  std::size_t size() const noexcept { return n_; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  MultiPoly trace() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  // Drops entries' terms above max_degree in var.
  PolyMatrix truncate(std::size_t var, unsigned max_degree) const;

private:
  std::size_t n_;
  std::size_t nvars_;
  std::vector<MultiPoly> entries_;
};

}  // namespace pforge
