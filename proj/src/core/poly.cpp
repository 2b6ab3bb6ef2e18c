#include "poly.hpp"

#include "errors.hpp"

#include <numeric>

namespace pforge {

namespace {

unsigned degree(const Monomial& m)
{
  return std::accumulate(m.begin(), m.end(), 0u);
}

void check_same(const MultiPoly& a, const MultiPoly& b)
{
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different variable sets");
}

}  // namespace

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const
{
  unsigned da = degree(a), db = degree(b);
  if (da != db)
    return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c)
{
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i)
{
  MultiPoly p(nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::linear(const Vector& coeffs)
{
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) {
      Monomial m(coeffs.size(), 0);
      m[i] = 1;
      p.add_term(m, coeffs[i]);
    }
  return p;
}

unsigned MultiPoly::total_degree() const
{
  return terms_.empty() ? 0 : degree(terms_.rbegin()->first);
}

void MultiPoly::add_term(const Monomial& m, const Rational& c)
{
  if (m.size() != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "monomial has the wrong number of exponents");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s)
{
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_)
    c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
  check_same(a, b);
  MultiPoly p(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
  MultiPoly d(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) == 0)
      continue;
    Monomial dm = m;
    --dm[var];
    d.add_term(dm, c * m[var]);
  }
  return d;
}

Rational MultiPoly::evaluate(const Vector& point) const
{
  if (point.size() != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has the wrong length");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e)
        t *= point[i];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::coefficient(std::size_t var, unsigned power) const
{
  if (var >= nvars_)
    throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  MultiPoly out(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[var] != power)
      continue;
    Monomial r;
    r.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var)
        r.push_back(m[i]);
    out.add_term(r, c);
  }
  return out;
}

MultiPoly MultiPoly::truncate(std::size_t var, unsigned max_degree) const
{
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.at(var) <= max_degree)
      out.terms_.emplace(m, c);
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const
{
  if (images.size() != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "need one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  // powers[i][e] = images[i]^e
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0)
        continue;
      auto& pw = powers[i];
      if (pw.empty())
        pw.push_back(MultiPoly::constant(target, 1));
      while (pw.size() <= m[i])
        pw.push_back(pw.back() * images[i]);
      t = t * pw[m[i]];
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::extend(std::size_t extra) const
{
  MultiPoly out(nvars_ + extra);
  for (const auto& [m, c] : terms_) {
    Monomial e = m;
    e.resize(nvars_ + extra, 0);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

PolyMatrix::PolyMatrix(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), entries_(n * n, MultiPoly(nvars)) {}

MultiPoly PolyMatrix::trace() const
{
  MultiPoly t(nvars_);
  for (std::size_t i = 0; i < n_; ++i)
    t += (*this)(i, i);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
  if (a.n_ != b.n_ || a.nvars_ != b.nvars_)
    throw Error(ErrorCode::DimensionMismatch, "polynomial matrix size mismatch");
  PolyMatrix p(a.n_, a.nvars_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero())
          p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

PolyMatrix PolyMatrix::truncate(std::size_t var, unsigned max_degree) const
{
  PolyMatrix out(n_, nvars_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i].truncate(var, max_degree);
  return out;
}

}  // namespace pforge
