#include "catalog.hpp"

#include "errors.hpp"
#include "json_io.hpp"

#include <algorithm>

namespace pforge {

namespace {

Matrix unit_matrix(std::size_t n, std::size_t a, std::size_t b)
{
  Matrix m(n, n);
  m(a, b) = 1;
  return m;
}

std::string index_label(char prefix, std::size_t a, std::size_t b, std::size_t n)
{
  std::string sep = n > 9 ? "_" : "";
  return prefix + std::to_string(a + 1) + sep + std::to_string(b + 1);
}

Vector flatten(const Matrix& m)
{
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      v.push_back(m(r, c));
  return v;
}

std::size_t param_n(const nlohmann::json& params, std::size_t fallback, std::size_t min_n)
{
  std::size_t n = fallback;
  if (params.contains("n")) {
    const auto& v = params["n"];
    if (!v.is_number_integer() || v.get<long long>() < 1)
      throw Error(ErrorCode::InvalidArgument, "parameter 'n' must be a positive integer");
    n = v.get<std::size_t>();
  }
  if (n < min_n)
    throw Error(ErrorCode::InvalidArgument, "parameter 'n' must be at least " + std::to_string(min_n));
  return n;
}

Rational param_rational(const nlohmann::json& params, const char* key, const Rational& fallback)
{
  if (!params.contains(key))
    return fallback;
  return rational_from_json(params[key], std::string("/") + key);
}

// "A": list -> diagonal matrix, list of lists -> full matrix; default diag(1..n).
Matrix param_matrix(const nlohmann::json& params, const char* key, std::size_t n, bool default_diag_range)
{
  Matrix m(n, n);
  if (!params.contains(key)) {
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = default_diag_range ? Rational(static_cast<long>(i + 1)) : Rational(1);
    return m;
  }
  const auto& j = params[key];
  const std::string ptr = std::string("/") + key;
  if (!j.is_array() || j.size() != n)
    throw Error(ErrorCode::Parse, "at " + ptr + ": expected an array of length " + std::to_string(n));
  if (!j.empty() && j[0].is_array())
    return matrix_from_json(j, n, ptr);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = rational_from_json(j[i], ptr + "/" + std::to_string(i));
  return m;
}

bool is_diagonal(const Matrix& m)
{
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && sgn(m(r, c)) != 0)
        return false;
  return true;
}

void validate_pencil_samples(const BracketPencil& p)
{
  PointSampler sampler(7, 11);
  for (std::uint64_t k = 0; k < 10; ++k) {
    Rational s1 = sampler.scalar(k, 0, 50), s2 = sampler.scalar(k, 1, 50);
    if (!check_jacobi(p.member(s1, s2), 1).empty())
      throw Error(ErrorCode::Internal, "catalog pencil fails Jacobi at a sampled parameter");
  }
}

std::vector<std::string> gl_labels(std::size_t n)
{
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      labels.push_back(index_label('E', a, b, n));
  return labels;
}

std::vector<std::string> sl_labels(std::size_t n)
{
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      labels.push_back(index_label('E', a, b, n));
  for (std::size_t i = 0; i + 1 < n; ++i)
    labels.push_back("H" + std::to_string(i + 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      labels.push_back(index_label('E', a, b, n));
  return labels;
}

std::vector<std::string> so_labels(std::size_t n)
{
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      labels.push_back(index_label('S', a, b, n));
  return labels;
}

CatalogEntry finish(CatalogEntry e)
{
  require_lie(e.algebra);
  if (e.op) {
    if (!torsion(e.algebra, *e.op).is_zero())
      throw Error(ErrorCode::Internal, "catalog operator has nonzero torsion");
    e.pencil = pencil_of(e.algebra, *e.op);
  }
  if (e.pencil)
    validate_pencil_samples(*e.pencil);
  return e;
}

CatalogEntry build_outer(const nlohmann::json& params)
{
  const std::size_t n = param_n(params, 3, 1);
  const Matrix a = param_matrix(params, "A", n, true);
  const Matrix id_form = param_matrix(params, "I", n, false);
  const Matrix j = param_matrix(params, "J", n, false);
  Matrix j_inv;
  try {
    j_inv = inverse(j);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidArgument, "involution matrix J must be invertible");
  }
  auto star = [&](const Matrix& b) { return j * b.transpose() * j_inv; };

  const auto units = gl_basis(n);
  for (const auto& x : units) {
    if (!(star(star(x)) == x))
      throw Error(ErrorCode::InvalidArgument, "B -> J B^T J^-1 is not an involution");
    for (const auto& y : units)
      if (!(star(x * y) == star(y) * star(x)))
        throw Error(ErrorCode::InvalidArgument, "involution does not reverse products");
  }
  if (!(a * id_form - id_form * star(a)).is_zero())
    throw Error(ErrorCode::InvalidArgument, "A must satisfy A I - I A* = 0");

  // g_I = ker(B -> B I + I B*) on vec(B)
  Matrix lin(n * n, n * n);
  for (std::size_t u = 0; u < units.size(); ++u) {
    Vector img = flatten(units[u] * id_form + id_form * star(units[u]));
    for (std::size_t r = 0; r < img.size(); ++r)
      lin(r, u) = img[r];
  }
  std::vector<Matrix> basis;
  for (const auto& k : kernel(lin)) {
    Matrix b(n, n);
    for (std::size_t idx = 0; idx < k.size(); ++idx)
      b(idx / n, idx % n) = k[idx];
    basis.push_back(std::move(b));
  }
  std::reverse(basis.begin(), basis.end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i)
    labels.push_back("B" + std::to_string(i + 1));
  const bool is_so = (id_form == Matrix::identity(n)) && (j == Matrix::identity(n));
  if (is_so) {
    basis = so_basis(n);
    labels = so_labels(n);
  }

  CatalogEntry e;
  e.name = "outer_pencil";
  e.matrix_basis = basis;
  e.algebra = matrix_algebra(basis, labels);
  StructureConstants c2 = matrix_algebra(basis, labels, [&](const Matrix& x, const Matrix& y) {
    return x * a * y - y * a * x;
  });
  std::vector<Rational> exceptional;
  if (is_diagonal(a))
    for (std::size_t i = 0; i < n; ++i)
      exceptional.push_back(a(i, i));
  else
    exceptional = rational_spectrum(a);
  e.pencil = BracketPencil(e.algebra, std::move(c2), std::move(exceptional), PencilOrigin::Outer);
  return e;
}

}  // namespace

std::vector<Matrix> gl_basis(std::size_t n)
{
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.push_back(unit_matrix(n, a, b));
  return out;
}

std::vector<Matrix> sl_basis(std::size_t n)
{
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      out.push_back(unit_matrix(n, a, b));
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      out.push_back(unit_matrix(n, a, b));
  return out;
}

std::vector<Matrix> so_basis(std::size_t n)
{
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      out.push_back(unit_matrix(n, a, b) - unit_matrix(n, b, a));
  return out;
}

Matrix commutator(const Matrix& x, const Matrix& y)
{
  return x * y - y * x;
}

StructureConstants matrix_algebra(const std::vector<Matrix>& basis, std::vector<std::string> labels,
                                  const MatrixBracket& bracket)
{
  const std::size_t d = basis.size();
  std::vector<Vector> flat;
  for (const auto& b : basis)
    flat.push_back(flatten(b));
  const std::size_t len = flat.empty() ? 0 : flat.front().size();
  const Matrix span = Matrix::from_columns(flat, len);
  StructureConstants out(d, std::move(labels));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = solve(span, flatten(bracket(basis[i], basis[j])));
      if (!coords)
        throw Error(ErrorCode::NotASubalgebra, "matrix span is not closed under the bracket", {{"pair", {i, j}}});
      for (std::size_t k = 0; k < d; ++k)
        out.set_bracket(i, j, k, (*coords)[k]);
    }
  return out;
}

OperatorMatrix left_multiplication(const Matrix& a)
{
  const std::size_t n = a.rows();
  OperatorMatrix op(n * n, n * n);
  // A E_cd = sum_a A_ac E_ad
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(a(r, c)) != 0)
          op(r * n + d, c * n + d) = a(r, c);
  return op;
}

std::vector<std::string> catalog_names()
{
  return {"affine", "borel_projector", "gl", "left_mult", "outer_pencil", "sl", "sl2_projector", "so"};
}

CatalogEntry build(const std::string& name, const nlohmann::json& params)
{
  if (!params.is_object())
    throw Error(ErrorCode::Parse, "catalog parameters must be a JSON object");
  CatalogEntry e;
  e.name = name;
  e.parameters = params;
  if (name == "gl") {
    const std::size_t n = param_n(params, 2, 1);
    e.matrix_basis = gl_basis(n);
    e.algebra = matrix_algebra(e.matrix_basis, gl_labels(n));
  } else if (name == "sl") {
    const std::size_t n = param_n(params, 2, 2);
    e.matrix_basis = sl_basis(n);
    e.algebra = matrix_algebra(e.matrix_basis, sl_labels(n));
  } else if (name == "so") {
    const std::size_t n = param_n(params, 3, 2);
    e.matrix_basis = so_basis(n);
    e.algebra = matrix_algebra(e.matrix_basis, so_labels(n));
  } else if (name == "left_mult") {
    const std::size_t n = param_n(params, 2, 1);
    const Matrix a = param_matrix(params, "A", n, true);
    const bool general = params.value("general", false);
    if (!general && !is_diagonal(a))
      throw Error(ErrorCode::InvalidArgument, "left_mult expects a diagonal A (set \"general\": true otherwise)");
    e.matrix_basis = gl_basis(n);
    e.algebra = matrix_algebra(e.matrix_basis, gl_labels(n));
    e.op = left_multiplication(a);
  } else if (name == "borel_projector" || name == "sl2_projector") {
    const bool sl2 = name == "sl2_projector";
    const std::size_t n = sl2 ? 2 : param_n(params, 2, 2);
    const Rational l1 = sl2 ? Rational(1) : param_rational(params, "lambda1", 1);
    const Rational l2 = sl2 ? Rational(0) : param_rational(params, "lambda2", -1);
    if (l1 == l2)
      throw Error(ErrorCode::InvalidArgument, "lambda1 and lambda2 must differ");
    e.matrix_basis = sl_basis(n);
    e.algebra = matrix_algebra(e.matrix_basis, sl_labels(n));
    const std::size_t d = e.algebra.dim();
    const std::size_t lower_start = d - n * (n - 1) / 2;
    OperatorMatrix op(d, d);
    for (std::size_t i = 0; i < d; ++i)
      op(i, i) = i >= lower_start ? l1 : l2;
    e.op = std::move(op);
  } else if (name == "outer_pencil") {
    e = build_outer(params);
    e.parameters = params;
  } else if (name == "affine") {
    const std::size_t n = param_n(params, 1, 1);
    const auto units = gl_basis(n);
    StructureConstants gl = matrix_algebra(units, gl_labels(n));
    e.algebra = semidirect_product(gl, units, n);
  } else {
    throw Error(ErrorCode::UnknownName, "unknown catalog entry '" + name + "'");
  }
  return finish(std::move(e));
}

}  // namespace pforge
