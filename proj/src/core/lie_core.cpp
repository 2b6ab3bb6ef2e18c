#include "lie_core.hpp"

#include "errors.hpp"

#include <algorithm>
#include <limits>

namespace pforge {

namespace {

constexpr std::uint64_t kIndexStream = 1;
constexpr std::uint64_t kRaisStream = 3;

nlohmann::json vector_json(const Vector& v)
{
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v)
    j.push_back(to_string(x));
  return j;
}

std::string derived_label(const StructureConstants& c, const Vector& v, std::size_t fallback)
{
  std::size_t nonzero = 0, where = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) {
      ++nonzero;
      where = i;
    }
  if (nonzero == 1 && v[where] == 1)
    return c.label(where);
  return "b" + std::to_string(fallback);
}

}  // namespace

StructureConstants::StructureConstants(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), data_(dim * dim * dim, Rational(0))
{
  if (!labels_.empty() && labels_.size() != dim)
    throw Error(ErrorCode::DimensionMismatch, "label count does not match dimension");
}

std::string StructureConstants::label(std::size_t i) const
{
  if (i < labels_.size())
    return labels_[i];
  return "e" + std::to_string(i);
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& v)
{
  at(i, j, k) = v;
  at(j, i, k) = -v;
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const
{
  if (x.size() != dim_ || y.size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "bracket arguments must have length " + std::to_string(dim_));
  Vector out = zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0)
        continue;
      Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn((*this)(i, j, k)) != 0)
          out[k] += w * (*this)(i, j, k);
    }
  }
  return out;
}

Vector StructureConstants::bracket_basis(std::size_t i, std::size_t j) const
{
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    out[k] = (*this)(i, j, k);
  return out;
}

bool StructureConstants::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

StructureConstants StructureConstants::combine(const Rational& s1, const StructureConstants& a,
                                               const Rational& s2, const StructureConstants& b)
{
  if (a.dim_ != b.dim_)
    throw Error(ErrorCode::DimensionMismatch, "cannot combine brackets of different dimension");
  StructureConstants out(a.dim_, a.labels_);
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = s1 * a.data_[i] + s2 * b.data_[i];
  return out;
}

ViolationReport check_jacobi(const StructureConstants& c, std::size_t max_violations)
{
  ViolationReport report;
  const std::size_t n = c.dim();
  auto push = [&](Violation v) {
    if (report.violations.size() >= max_violations) {
      report.truncated = true;
      return false;
    }
    report.violations.push_back(std::move(v));
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational r = c(i, j, k) + c(j, i, k);
        if (sgn(r) != 0 && !push({"antisymmetry", {i, j, k}, r}))
          return report;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational r = 0;
          for (std::size_t m = 0; m < n; ++m) {
            r += c(i, j, m) * c(m, k, l);
            r += c(j, k, m) * c(m, i, l);
            r += c(k, i, m) * c(m, j, l);
          }
          if (sgn(r) != 0 && !push({"jacobi", {i, j, k, l}, r}))
            return report;
        }
  return report;
}

void require_lie(const StructureConstants& c)
{
  ViolationReport r = check_jacobi(c, 3);
  if (r.empty())
    return;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& v : r.violations)
    w.push_back({{"kind", v.kind}, {"indices", v.indices}, {"residual", to_string(v.residual)}});
  throw Error(ErrorCode::InvalidStructureConstants,
              r.violations.front().kind + " violated: not a Lie bracket", w);
}

Vector bracket_apply(const StructureConstants& c, const Vector& x, const Vector& y)
{
  return c.bracket(x, y);
}

Matrix lie_poisson_matrix(const StructureConstants& c, const Vector& xi)
{
  const std::size_t n = c.dim();
  if (xi.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "point must have length " + std::to_string(n));
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c(i, j, k)) != 0 && sgn(xi[k]) != 0)
          p(i, j) += c(i, j, k) * xi[k];
  return p;
}

IndexResult algebra_index(const StructureConstants& c, const PointSamplerConfig& cfg)
{
  cfg.validate();
  const std::size_t n = c.dim();
  IndexResult out;
  out.coord_bound = cfg.coord_bound;
  out.index = n;
  out.witness = zeros(n);
  if (n == 0)
    return out;
  PointSampler sampler(cfg.seed, kIndexStream);
  auto ranks = parallel_map<std::size_t>(cfg.samples, [&](std::size_t k) {
    return rank(lie_poisson_matrix(c, sampler.point(k, n, cfg.coord_bound)));
  });
  auto best = std::max_element(ranks.begin(), ranks.end());
  out.max_rank = *best;
  out.index = n - out.max_rank;
  out.witness = sampler.point(static_cast<std::uint64_t>(best - ranks.begin()), n, cfg.coord_bound);
  return out;
}

IndexResult certified_index(const StructureConstants& c, const PointSamplerConfig& cfg)
{
  PointSamplerConfig round = cfg;
  IndexResult prev = algebra_index(c, round);
  for (std::size_t r = 2; r <= 8; ++r) {
    round.coord_bound *= 2;
    IndexResult next = algebra_index(c, round);
    next.rounds = r;
    if (next.index == prev.index)
      return next;
    prev = std::move(next);
  }
  return prev;
}

SubspaceBasis::SubspaceBasis(std::vector<Vector> vectors, std::size_t ambient_dim)
    : vectors_(std::move(vectors)), ambient_(ambient_dim)
{
  for (const auto& v : vectors_)
    if (v.size() != ambient_)
      throw Error(ErrorCode::DimensionMismatch,
                  "subspace vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(ambient_));
  if (rank_of(vectors_, ambient_) != vectors_.size())
    throw Error(ErrorCode::InvalidArgument, "subspace basis is rank deficient");
}

SubspaceBasis SubspaceBasis::full(std::size_t n)
{
  std::vector<Vector> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(unit_vector(n, i));
  return SubspaceBasis(std::move(v), n);
}

Matrix SubspaceBasis::as_matrix() const
{
  return Matrix::from_columns(vectors_, ambient_);
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const
{
  if (vectors_.empty())
    return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
  return solve(as_matrix(), v);
}

bool SubspaceBasis::contains(const Vector& v) const
{
  return coordinates(v).has_value();
}

StructureConstants subalgebra_restrict(const StructureConstants& c, const SubspaceBasis& b)
{
  if (b.ambient_dim() != c.dim())
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension does not match algebra");
  const std::size_t m = b.dim();
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < m; ++p)
    labels.push_back(derived_label(c, b[p], p));
  StructureConstants out(m, std::move(labels));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      Vector w = c.bracket(b[p], b[q]);
      auto coords = b.coordinates(w);
      if (!coords)
        throw Error(ErrorCode::NotASubalgebra, "span is not closed under the bracket",
                    {{"pair", {p, q}}, {"bracket", vector_json(w)}});
      for (std::size_t k = 0; k < m; ++k)
        out.set_bracket(p, q, k, (*coords)[k]);
    }
  return out;
}

std::vector<std::size_t> complement_indices(const SubspaceBasis& b)
{
  std::vector<Vector> current = b.vectors();
  std::vector<std::size_t> picked;
  const std::size_t n = b.ambient_dim();
  std::size_t r = current.size();
  for (std::size_t i = 0; i < n && r < n; ++i) {
    current.push_back(unit_vector(n, i));
    if (rank_of(current, n) > r) {
      picked.push_back(i);
      ++r;
    } else {
      current.pop_back();
    }
  }
  return picked;
}

CoisotropyNumbers coisotropy_numbers(const StructureConstants& c, const SubspaceBasis& b, const Vector& a,
                                     const PointSamplerConfig& cfg)
{
  subalgebra_restrict(c, b);
  const std::size_t n = c.dim();
  const std::size_t m = b.dim();
  const std::size_t q = n - m;
  if (a.size() != q)
    throw Error(ErrorCode::DimensionMismatch, "covector must have length " + std::to_string(q));

  CoisotropyNumbers out;
  out.complement = complement_indices(b);
  std::vector<Vector> cols = b.vectors();
  for (auto idx : out.complement)
    cols.push_back(unit_vector(n, idx));
  const Matrix p_inv = inverse(Matrix::from_columns(cols, n));

  // T[r][p] = (rho_*(b_p) a)(e_r + subalgebra) = -a([b_p, e_r] mod subalgebra)
  Matrix t(q, m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < q; ++r) {
      Vector coords = p_inv.apply(c.bracket(b[p], unit_vector(n, out.complement[r])));
      Rational v = 0;
      for (std::size_t s = 0; s < q; ++s)
        v += a[s] * coords[m + s];
      t(r, p) = -v;
    }
  out.tangent_rank = rank(t);
  out.codim_a = q - out.tangent_rank;

  std::vector<Vector> stab;
  for (const auto& k : kernel(t)) {
    Vector v = zeros(n);
    for (std::size_t p = 0; p < m; ++p)
      if (sgn(k[p]) != 0)
        v = add(v, scale(k[p], b[p]));
    stab.push_back(std::move(v));
  }
  out.stabilizer = SubspaceBasis(std::move(stab), n);
  StructureConstants stab_alg;
  try {
    stab_alg = subalgebra_restrict(c, out.stabilizer);
  } catch (const Error& e) {
    throw Error(ErrorCode::StabilizerNotClosed, "stabilizer is not a subalgebra", e.witness());
  }
  out.ind_a = algebra_index(stab_alg, cfg).index;
  return out;
}

void validate_representation(const StructureConstants& h, const Representation& action, std::size_t dim_v)
{
  if (action.size() != h.dim())
    throw Error(ErrorCode::DimensionMismatch, "representation needs one matrix per basis element");
  for (const auto& a : action)
    if (a.rows() != dim_v || a.cols() != dim_v)
      throw Error(ErrorCode::DimensionMismatch, "representation matrices must be " + std::to_string(dim_v) + "x" +
                                                    std::to_string(dim_v));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      Matrix lhs(dim_v, dim_v);
      for (std::size_t k = 0; k < h.dim(); ++k)
        if (sgn(h(i, j, k)) != 0)
          lhs = lhs + h(i, j, k) * action[k];
      if (!(lhs == action[i] * action[j] - action[j] * action[i]))
        throw Error(ErrorCode::NotARepresentation, "action does not preserve brackets", {{"pair", {i, j}}});
    }
}

StructureConstants semidirect_product(const StructureConstants& h, const Representation& action, std::size_t dim_v)
{
  validate_representation(h, action, dim_v);
  const std::size_t m = h.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    labels.push_back(h.label(i));
  for (std::size_t a = 0; a < dim_v; ++a)
    labels.push_back("v" + std::to_string(a));
  StructureConstants out(m + dim_v, std::move(labels));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        out.set_bracket(i, j, k, h(i, j, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < dim_v; ++a)
      for (std::size_t b = 0; b < dim_v; ++b)
        out.set_bracket(i, m + a, m + b, action[i](b, a));
  return out;
}

StructureConstants change_basis(const StructureConstants& c, const Matrix& p)
{
  const std::size_t n = c.dim();
  if (p.rows() != n || p.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "basis change matrix has wrong size");
  const Matrix p_inv = inverse(p);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i)
    cols.push_back(p.column(i));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(derived_label(c, cols[i], i));
  StructureConstants out(n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector w = p_inv.apply(c.bracket(cols[i], cols[j]));
      for (std::size_t k = 0; k < n; ++k)
        out.set_bracket(i, j, k, w[k]);
    }
  return out;
}

bool is_homomorphism(const Matrix& phi, const StructureConstants& from, const StructureConstants& to)
{
  if (phi.cols() != from.dim() || phi.rows() != to.dim())
    throw Error(ErrorCode::DimensionMismatch, "homomorphism matrix has wrong size");
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i + 1; j < from.dim(); ++j)
      if (phi.apply(from.bracket_basis(i, j)) != to.bracket(phi.column(i), phi.column(j)))
        return false;
  return true;
}

TwilledTruncation twilled_truncate(const StructureConstants& c, const SubspaceBasis& b1, const SubspaceBasis& b2)
{
  const std::size_t n = c.dim();
  if (b1.ambient_dim() != n || b2.ambient_dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension does not match algebra");
  std::vector<Vector> cols = b1.vectors();
  cols.insert(cols.end(), b2.vectors().begin(), b2.vectors().end());
  if (cols.size() != n || rank_of(cols, n) != n)
    throw Error(ErrorCode::NotDirectSum, "subspaces do not form a direct sum decomposition");

  TwilledTruncation out;
  out.g1 = subalgebra_restrict(c, b1);
  subalgebra_restrict(c, b2);
  out.basis = Matrix::from_columns(cols, n);
  const StructureConstants full = change_basis(c, out.basis);
  const std::size_t m1 = b1.dim(), m2 = b2.dim();

  out.truncated = StructureConstants(n, full.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (i >= m1)
        continue;  // [g2, g2] = 0
      const bool mixed = j >= m1;
      for (std::size_t k = mixed ? m1 : 0; k < (mixed ? n : m1); ++k)
        out.truncated.set_bracket(i, j, k, full(i, j, k));
    }

  for (std::size_t i = 0; i < m1; ++i) {
    Matrix a(m2, m2);
    for (std::size_t col = 0; col < m2; ++col)
      for (std::size_t row = 0; row < m2; ++row)
        a(row, col) = full(i, m1 + col, m1 + row);
    out.a1.push_back(std::move(a));
  }
  for (std::size_t x = 0; x < m2; ++x) {
    Matrix a(m1, m1);
    for (std::size_t col = 0; col < m1; ++col)
      for (std::size_t row = 0; row < m1; ++row)
        a(row, col) = full(m1 + x, col, row);
    out.a2.push_back(std::move(a));
  }
  validate_representation(out.g1, out.a1, m2);
  return out;
}

RaisReport rais_check(const StructureConstants& h, const Representation& action, std::size_t dim_v,
                      const PointSamplerConfig& cfg)
{
  cfg.validate();
  const StructureConstants product = semidirect_product(h, action, dim_v);
  RaisReport out;
  IndexResult lhs = algebra_index(product, cfg);
  out.lhs_index = lhs.index;
  out.lhs_witness = lhs.witness;

  const std::size_t m = h.dim();
  PointSampler sampler(cfg.seed, kRaisStream);
  struct Side {
    std::size_t codim, stab_index, stab_dim;
  };
  auto sides = parallel_map<Side>(cfg.samples, [&](std::size_t k) {
    Vector a = sampler.point(k, dim_v, cfg.coord_bound);
    // (x_i . a)_v = -sum_w a_w A_i(w, v)
    Matrix tangent(dim_v, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t v = 0; v < dim_v; ++v) {
        Rational s = 0;
        for (std::size_t w = 0; w < dim_v; ++w)
          s += a[w] * action[i](w, v);
        tangent(v, i) = -s;
      }
    std::size_t r = rank(tangent);
    SubspaceBasis stab(kernel(tangent), m);
    PointSamplerConfig inner = cfg;
    inner.seed = splitmix64(cfg.seed + k);
    std::size_t ind = algebra_index(subalgebra_restrict(h, stab), inner).index;
    return Side{dim_v - r, ind, stab.dim()};
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < sides.size(); ++k)
    if (sides[k].codim + sides[k].stab_index < sides[best].codim + sides[best].stab_index)
      best = k;
  out.orbit_codim = sides[best].codim;
  out.stabilizer_index = sides[best].stab_index;
  out.stabilizer_dim = sides[best].stab_dim;
  out.witness_a = sampler.point(best, dim_v, cfg.coord_bound);
  out.holds = out.lhs_index == out.orbit_codim + out.stabilizer_index;
  return out;
}

}  // namespace pforge
