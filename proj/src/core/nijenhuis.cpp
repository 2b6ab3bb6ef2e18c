#include "nijenhuis.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>

namespace pforge {

namespace {

void check_square(const StructureConstants& c, const OperatorMatrix& n)
{
  if (n.rows() != c.dim() || n.cols() != c.dim())
    throw Error(ErrorCode::DimensionMismatch, "operator must be " + std::to_string(c.dim()) + "x" +
                                                  std::to_string(c.dim()));
}

nlohmann::json poly_json(const std::vector<Rational>& p)
{
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : p)
    j.push_back(to_string(x));
  return j;
}

std::vector<Integer> divisors(Integer x)
{
  if (x < 0)
    x = -x;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= x; ++d)
    if (x % d == 0) {
      small.push_back(d);
      if (d * d != x)
        large.push_back(x / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& x)
{
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Divides p by (x - r), assuming r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r)
{
  const std::size_t deg = p.size() - 1;
  std::vector<Rational> q(deg);
  Rational carry = 0;
  for (std::size_t i = deg; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

StructureConstants deform_raw(const StructureConstants& c, const OperatorMatrix& n)
{
  const std::size_t d = c.dim();
  StructureConstants out(d, c.labels());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector v = add(c.bracket(n.column(i), unit_vector(d, j)), c.bracket(unit_vector(d, i), n.column(j)));
      v = add(v, scale(-1, n.apply(c.bracket_basis(i, j))));
      for (std::size_t k = 0; k < d; ++k)
        out.set_bracket(i, j, k, v[k]);
    }
  return out;
}

}  // namespace

TorsionTensor torsion(const StructureConstants& c, const OperatorMatrix& n)
{
  check_square(c, n);
  const std::size_t d = c.dim();
  const OperatorMatrix n2 = n * n;
  TorsionTensor out{StructureConstants(d, c.labels()), std::nullopt};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector ni = n.column(i), nj = n.column(j);
      Vector t = c.bracket(ni, nj);
      Vector inner = add(c.bracket(ni, unit_vector(d, j)), c.bracket(unit_vector(d, i), nj));
      t = add(t, scale(-1, n.apply(inner)));
      t = add(t, n2.apply(c.bracket_basis(i, j)));
      for (std::size_t k = 0; k < d; ++k)
        out.values.set_bracket(i, j, k, t[k]);
      if (!out.first_nonzero && !is_zero(t))
        out.first_nonzero = std::make_pair(i, j);
    }
  return out;
}

StructureConstants deformed_bracket(const StructureConstants& c, const OperatorMatrix& n, bool allow_nonzero_torsion)
{
  check_square(c, n);
  if (!allow_nonzero_torsion) {
    TorsionTensor t = torsion(c, n);
    if (!t.is_zero())
      throw Error(ErrorCode::TorsionNonzero, "operator has nonzero Nijenhuis torsion",
                  {{"pair", {t.first_nonzero->first, t.first_nonzero->second}}});
  }
  StructureConstants out = deform_raw(c, n);
  if (allow_nonzero_torsion) {
    ViolationReport r = check_jacobi(out, 1);
    if (!r.empty())
      throw Error(ErrorCode::JacobiFailure, "deformed bracket violates the Jacobi identity",
                  {{"indices", r.violations.front().indices}, {"residual", to_string(r.violations.front().residual)}});
  }
  return out;
}

const char* origin_name(PencilOrigin o)
{
  switch (o) {
  case PencilOrigin::FromOperator: return "from-operator";
  case PencilOrigin::Outer: return "outer";
  case PencilOrigin::Manual: return "manual";
  }
  return "manual";
}

PencilOrigin parse_origin(const std::string& s)
{
  if (s == "from-operator")
    return PencilOrigin::FromOperator;
  if (s == "outer")
    return PencilOrigin::Outer;
  if (s == "manual")
    return PencilOrigin::Manual;
  throw Error(ErrorCode::Parse, "unknown pencil origin '" + s + "'");
}

BracketPencil::BracketPencil(StructureConstants c1, StructureConstants c2, std::vector<Rational> exceptional,
                             PencilOrigin origin)
    : c1_(std::move(c1)), c2_(std::move(c2)), exceptional_(std::move(exceptional)), origin_(origin)
{
  if (c1_.dim() != c2_.dim())
    throw Error(ErrorCode::DimensionMismatch, "pencil brackets have different dimensions");
  std::sort(exceptional_.begin(), exceptional_.end());
  exceptional_.erase(std::unique(exceptional_.begin(), exceptional_.end()), exceptional_.end());
  require_lie(c1_);
  require_lie(c2_);
  if (!check_jacobi(member(1, 1), 1).empty())
    throw Error(ErrorCode::InvalidStructureConstants, "pencil brackets are not compatible");

  // Dependent iff the 2 x dim^3 matrix [c1; c2] has rank < 2.
  const std::size_t d = c1_.dim();
  std::vector<Vector> rows(2, Vector(d * d * d));
  for (std::size_t i = 0, idx = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k, ++idx) {
        rows[0][idx] = c1_(i, j, k);
        rows[1][idx] = c2_(i, j, k);
      }
  degenerate_ = rank_of(rows, d * d * d) < 2;
}

BracketPencil pencil_of(const StructureConstants& c, const OperatorMatrix& n)
{
  StructureConstants c2 = deformed_bracket(c, n);
  return BracketPencil(c, std::move(c2), rational_spectrum(n), PencilOrigin::FromOperator);
}

OperatorMatrix shifted(const OperatorMatrix& n, const Rational& lambda)
{
  return n - lambda * Matrix::identity(n.rows());
}

bool resolvent_identity_check(const StructureConstants& c, const OperatorMatrix& n, const Rational& lambda)
{
  check_square(c, n);
  const OperatorMatrix m = shifted(n, lambda);
  OperatorMatrix m_inv;
  try {
    m_inv = inverse(m);
  } catch (const Error&) {
    throw Error(ErrorCode::Singular, "SingularShift: " + to_string(lambda) + " is an eigenvalue");
  }
  const StructureConstants rhs = StructureConstants::combine(1, deform_raw(c, n), -lambda, c);
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j)
      if (m_inv.apply(c.bracket(m.column(i), m.column(j))) != rhs.bracket_basis(i, j))
        return false;
  return true;
}

std::vector<Rational> characteristic_polynomial(const OperatorMatrix& n)
{
  if (!n.square())
    throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier
  const std::size_t d = n.rows();
  std::vector<Rational> coeff(d + 1, Rational(0));
  coeff[d] = 1;
  Matrix m(d, d);
  for (std::size_t k = 1; k <= d; ++k) {
    m = n * m + coeff[d - k + 1] * Matrix::identity(d);
    Matrix am = n * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < d; ++i)
      tr += am(i, i);
    coeff[d - k] = -tr / static_cast<long>(k);
  }
  return coeff;
}

RationalRoots rational_roots(const std::vector<Rational>& poly)
{
  RationalRoots out;
  std::vector<Rational> p = poly;
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
  std::map<Rational, std::size_t> found;
  while (p.size() > 1 && sgn(p.front()) == 0) {
    p.erase(p.begin());
    ++found[Rational(0)];
  }
  bool progress = true;
  while (p.size() > 1 && progress) {
    progress = false;
    Integer lcm = 1;
    for (const auto& x : p)
      lcm = lcm * x.get_den() / gcd(lcm, x.get_den());
    Integer a0 = Rational(p.front() * lcm).get_num();
    Integer an = Rational(p.back() * lcm).get_num();
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int sign : {1, -1}) {
          Rational r(num * sign, den);
          r.canonicalize();
          if (sgn(evaluate(p, r)) == 0) {
            p = deflate(p, r);
            ++found[r];
            progress = true;
            break;
          }
        }
        if (progress)
          break;
      }
      if (progress)
        break;
    }
  }
  for (auto& [r, m] : found)
    out.roots.emplace_back(r, m);
  if (p.size() > 1)
    out.remainder = p;
  return out;
}

std::vector<Rational> rational_spectrum(const OperatorMatrix& n)
{
  RationalRoots rr = rational_roots(characteristic_polynomial(n));
  if (!rr.remainder.empty())
    throw Error(ErrorCode::IrrationalSpectrum, "characteristic polynomial does not split over Q",
                {{"unsplit_factor", poly_json(rr.remainder)}});
  std::vector<Rational> out;
  for (auto& [r, m] : rr.roots)
    out.push_back(r);
  return out;
}

std::vector<Eigenspace> spectrum_and_eigenspaces(const OperatorMatrix& n)
{
  RationalRoots rr = rational_roots(characteristic_polynomial(n));
  if (!rr.remainder.empty())
    throw Error(ErrorCode::IrrationalSpectrum, "characteristic polynomial does not split over Q",
                {{"unsplit_factor", poly_json(rr.remainder)}});
  std::vector<Eigenspace> out;
  for (const auto& [lambda, mult] : rr.roots) {
    const Matrix a = shifted(n, lambda);
    Matrix ar = a;
    unsigned r = 1;
    std::size_t rk = rank(ar);
    for (;;) {
      Matrix next = ar * a;
      std::size_t rk_next = rank(next);
      if (rk_next == rk)
        break;
      ar = std::move(next);
      rk = rk_next;
      ++r;
    }
    SubspaceBasis basis(kernel(ar), n.rows());
    if (basis.dim() != mult)
      throw Error(ErrorCode::Internal, "generalized eigenspace dimension differs from multiplicity");
    out.push_back(Eigenspace{lambda, std::move(basis), r});
  }
  return out;
}

bool is_diagonalizable(const std::vector<Eigenspace>& spaces)
{
  return std::all_of(spaces.begin(), spaces.end(), [](const Eigenspace& e) { return e.riesz_index == 1; });
}

OperatorMatrix operator_from_decomposition(const StructureConstants& c, const std::vector<SubspaceBasis>& parts,
                                           const std::vector<Rational>& eigenvalues)
{
  const std::size_t d = c.dim();
  if (parts.size() != eigenvalues.size())
    throw Error(ErrorCode::DimensionMismatch, "one eigenvalue per part is required");
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j])
        throw Error(ErrorCode::DuplicateEigenvalue, "eigenvalues must be pairwise distinct", {{"pair", {i, j}}});
  std::vector<Vector> cols;
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].ambient_dim() != d)
      throw Error(ErrorCode::DimensionMismatch, "part ambient dimension does not match algebra");
    for (const auto& v : parts[i].vectors()) {
      cols.push_back(v);
      diag.push_back(eigenvalues[i]);
    }
  }
  if (cols.size() != d || rank_of(cols, d) != d)
    throw Error(ErrorCode::NotDirectSum, "parts do not form a direct sum decomposition");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j) {
      std::vector<Vector> sum = parts[i].vectors();
      if (j != i)
        sum.insert(sum.end(), parts[j].vectors().begin(), parts[j].vectors().end());
      try {
        subalgebra_restrict(c, SubspaceBasis(std::move(sum), d));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotASubalgebra)
          throw;
        throw Error(ErrorCode::PairwiseSumNotSubalgebra, "sum of parts is not a subalgebra",
                    {{"parts", {i, j}}, {"witness", e.witness()}});
      }
    }
  const Matrix p = Matrix::from_columns(cols, d);
  Matrix dm(d, d);
  for (std::size_t i = 0; i < d; ++i)
    dm(i, i) = diag[i];
  OperatorMatrix n = p * dm * inverse(p);
  if (!torsion(c, n).is_zero())
    throw Error(ErrorCode::Internal, "operator built from a decomposition has nonzero torsion");
  return n;
}

SubspaceBasis image_subalgebra(const StructureConstants& c, const OperatorMatrix& n, const Rational& lambda)
{
  check_square(c, n);
  SubspaceBasis b(column_space(shifted(n, lambda)), c.dim());
  subalgebra_restrict(c, b);
  return b;
}

OperatorMatrix linear_fractional(const OperatorMatrix& n, const Rational& s1, const Rational& s2, const Rational& s3,
                                 const Rational& s4)
{
  const Matrix id = Matrix::identity(n.rows());
  Matrix den;
  try {
    den = inverse(s3 * n + s4 * id);
  } catch (const Error&) {
    throw Error(ErrorCode::Singular, "SingularDenominator: s3 N + s4 Id is not invertible");
  }
  return (s1 * n + s2 * id) * den;
}

}  // namespace pforge
