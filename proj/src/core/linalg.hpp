#pragma once

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pforge {

// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  // Columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;

  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column, in canonical form.
std::vector<Vector> kernel(const Matrix& m);

// Canonical basis of the column space (nonzero rows of rref of the transpose).
std::vector<Vector> column_space(const Matrix& m);

// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Throws Error(Singular) when m is not invertible.
Matrix inverse(const Matrix& m);

Matrix power(const Matrix& m, unsigned k);

// Rank of a list of vectors of common length n.
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t n);

}  // namespace pforge
