#include "linalg.hpp"

#include "errors.hpp"

#include <utility>

namespace pforge {

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const
{
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& x) const
{
  if (x.size() != cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
  Vector y = zeros(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0)
        y[r] += (*this)(r, c) * x[c];
  return y;
}

Matrix Matrix::transpose() const
{
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const
{
  for (const auto& x : data_)
    if (sgn(x) != 0)
      return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0)
          p(i, j) += aik * b(k, j);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum size mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i)
    s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference size mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i)
    s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Rational& s, const Matrix& a)
{
  Matrix r = a;
  for (auto& x : r.data_)
    x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b)
{
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon rref(Matrix m)
{
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && sgn(m(piv, col)) == 0)
      ++piv;
    if (piv == m.rows())
      continue;
    if (piv != lead)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(piv, c), m(lead, c));
    Rational inv = 1 / m(lead, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      m(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, col)) == 0)
        continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(lead, c)) != 0)
          m(r, c) -= f * m(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m)
{
  return rref(m).pivots.size();
}

std::vector<Vector> kernel(const Matrix& m)
{
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v = zeros(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> column_space(const Matrix& m)
{
  RowEchelon e = rref(m.transpose());
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    basis.push_back(e.reduced.row(r));
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols())
    return std::nullopt;
  Vector x = zeros(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Matrix inverse(const Matrix& m)
{
  if (!m.square())
    throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (n > 0 && (e.pivots.size() < n || e.pivots[n - 1] != n - 1))
    throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Matrix power(const Matrix& m, unsigned k)
{
  Matrix p = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i)
    p = p * m;
  return p;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t n)
{
  if (vectors.empty())
    return 0;
  return rank(Matrix::from_rows(vectors, n));
}

}  // namespace pforge
