#include "integrals.hpp"

#include "catalog.hpp"
#include "errors.hpp"
#include "sampling.hpp"

#include <map>
#include <set>

namespace pforge {

namespace {

void require_vars(const MultiPoly& f, std::size_t n)
{
  if (f.nvars() != n)
    throw Error(ErrorCode::DimensionMismatch, "polynomial has " + std::to_string(f.nvars()) +
                                                  " variables, algebra has dimension " + std::to_string(n));
}

std::vector<MultiPoly> poisson_rows(const StructureConstants& c, const std::vector<MultiPoly>& df)
{
  const std::size_t n = c.dim();
  std::vector<MultiPoly> field(n, MultiPoly(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (df[j].is_zero())
        continue;
      Vector pij(n);
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        pij[k] = c(i, j, k);
        any = any || sgn(pij[k]) != 0;
      }
      if (any)
        field[i] += MultiPoly::linear(pij) * df[j];
    }
  return field;
}

std::vector<MultiPoly> all_derivatives(const MultiPoly& f)
{
  std::vector<MultiPoly> out;
  out.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i)
    out.push_back(f.derivative(i));
  return out;
}

MultiPoly contract(const std::vector<MultiPoly>& dg, const std::vector<MultiPoly>& field, std::size_t n)
{
  MultiPoly out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!dg[i].is_zero() && !field[i].is_zero())
      out += dg[i] * field[i];
  return out;
}

// Matrix of gl_n coordinates in n*n + extra variables.
PolyMatrix coordinate_matrix(std::size_t n, std::size_t extra)
{
  PolyMatrix x(n, n * n + extra);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      x(a, b) = MultiPoly::variable(n * n + extra, a * n + b);
  return x;
}

std::string member_name(char prefix, unsigned k, unsigned l)
{
  return std::string(1, prefix) + "_{" + std::to_string(k) + "," + std::to_string(l) + "}";
}

void require_square(const Matrix& a, std::size_t n)
{
  if (a.rows() != n || a.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "A must be " + std::to_string(n) + "x" + std::to_string(n));
}

bool has_repeated_diagonal(const Matrix& a)
{
  std::set<Rational> seen;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!seen.insert(a(i, i)).second)
      return true;
  return false;
}

bool diagonal(const Matrix& a)
{
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c && sgn(a(r, c)) != 0)
        return false;
  return true;
}

}  // namespace

void IntegralFamily::validate() const
{
  std::set<std::string> names;
  for (const auto& m : members) {
    if (!names.insert(m.name).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate member name '" + m.name + "'");
    if (m.poly.nvars() != nvars)
      throw Error(ErrorCode::DimensionMismatch, "member '" + m.name + "' has the wrong number of variables");
  }
}

MultiPoly poisson_bracket_poly(const StructureConstants& c, const MultiPoly& f, const MultiPoly& g)
{
  require_vars(f, c.dim());
  require_vars(g, c.dim());
  return contract(all_derivatives(f), poisson_rows(c, all_derivatives(g)), c.dim());
}

MultiPoly poisson_bracket_poly(const BracketPencil& p, const Rational& s1, const Rational& s2, const MultiPoly& f,
                               const MultiPoly& g)
{
  return poisson_bracket_poly(p.member(s1, s2), f, g);
}

std::vector<MultiPoly> hamiltonian_field(const StructureConstants& c, const MultiPoly& f)
{
  require_vars(f, c.dim());
  return poisson_rows(c, all_derivatives(f));
}

std::vector<MultiPoly> hamiltonian_field(const BracketPencil& p, const Rational& s1, const Rational& s2,
                                         const MultiPoly& f)
{
  return hamiltonian_field(p.member(s1, s2), f);
}

IntegralFamily manakov_family(std::size_t n, const Matrix& a)
{
  require_square(a, n);
  if (!diagonal(a))
    throw Error(ErrorCode::InvalidArgument, "Manakov family expects a diagonal A");
  IntegralFamily fam;
  fam.provenance = "manakov";
  fam.nvars = n * n;
  if (has_repeated_diagonal(a))
    fam.warnings.push_back("A has repeated diagonal entries");
  const std::size_t lam = n * n;
  PolyMatrix shifted = coordinate_matrix(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    shifted(i, i) += a(i, i) * MultiPoly::variable(lam + 1, lam);
  PolyMatrix power = shifted;
  for (unsigned k = 1; k <= n; ++k) {
    if (k > 1)
      power = power * shifted;
    MultiPoly tr = power.trace();
    tr *= Rational(1, k);
    for (unsigned l = 0; l < k; ++l)
      fam.members.push_back({member_name('h', k, l), tr.coefficient(lam, l), k, l});
  }
  return fam;
}

IntegralFamily resolvent_family(std::size_t n, const Matrix& a, unsigned max_l, bool beyond_degree)
{
  require_square(a, n);
  if (!diagonal(a))
    throw Error(ErrorCode::InvalidArgument, "resolvent family expects a diagonal A");
  IntegralFamily fam;
  fam.provenance = "resolvent";
  fam.nvars = n * n;
  if (has_repeated_diagonal(a))
    fam.warnings.push_back("A has repeated diagonal entries");
  if (beyond_degree)
    fam.warnings.push_back("orders beyond k-1 included");
  const std::size_t t = n * n;
  const std::size_t nv = n * n + 1;
  const PolyMatrix x = coordinate_matrix(n, 1);

  // series = sum_j t^j A^j x, truncated at t^max_l
  PolyMatrix series(n, nv);
  Matrix apow = Matrix::identity(n);
  MultiPoly tpow = MultiPoly::constant(nv, 1);
  for (unsigned j = 0; j <= max_l; ++j) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col)
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(apow(r, m)) != 0)
            series(r, col) += apow(r, m) * (tpow * x(m, col));
    apow = apow * a;
    tpow = tpow * MultiPoly::variable(nv, t);
  }

  PolyMatrix power = series;
  for (unsigned k = 1; k <= n; ++k) {
    if (k > 1)
      power = (power * series).truncate(t, max_l);
    const MultiPoly tr = power.trace();
    const unsigned top = beyond_degree ? max_l : std::min<unsigned>(k - 1, max_l);
    for (unsigned l = 0; l <= top; ++l)
      fam.members.push_back({member_name('f', k, l), tr.coefficient(t, l), k, l});
  }
  return fam;
}

std::vector<MultiPoly> sl_matrix_entries(std::size_t n)
{
  const auto basis = sl_basis(n);
  const std::size_t d = basis.size();
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          gram(i, j) += basis[i](a, b) * basis[j](a, b);
  const Matrix g_inv = inverse(gram);
  std::vector<MultiPoly> entries(n * n, MultiPoly(d));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // x_ab = sum_p (G^-1 xi)_p B_p(a,b)
      Vector coeffs(d);
      for (std::size_t p = 0; p < d; ++p)
        if (sgn(basis[p](a, b)) != 0)
          for (std::size_t m = 0; m < d; ++m)
            coeffs[m] += basis[p](a, b) * g_inv(p, m);
      entries[a * n + b] = MultiPoly::linear(coeffs);
    }
  return entries;
}

IntegralFamily borel_family(std::size_t n)
{
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "Borel family needs n >= 2");
  const std::size_t d = n * n - 1;
  const std::size_t lam = d;
  const std::size_t nv = d + 1;
  const auto entries = sl_matrix_entries(n);
  const MultiPoly lambda = MultiPoly::variable(nv, lam);
  const MultiPoly one = MultiPoly::constant(nv, 1);
  PolyMatrix scaled(n, nv);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      scaled(a, b) = entries[a * n + b].extend(1) * (a > b ? lambda + one : lambda - one);

  IntegralFamily fam;
  fam.provenance = "borel";
  fam.nvars = d;
  PolyMatrix power = scaled;
  for (unsigned k = 2; k <= n; ++k) {
    power = power * scaled;
    const MultiPoly tr = power.trace();
    for (unsigned l = 0; l <= k; ++l) {
      MultiPoly coeff = tr.coefficient(lam, l);
      if (!coeff.is_zero())
        fam.members.push_back({member_name('b', k, l), std::move(coeff), k, l});
    }
  }
  return fam;
}

IntegralFamily casimir_resolvent_family(const StructureConstants& c, const OperatorMatrix& n,
                                        const std::vector<MultiPoly>& casimirs, unsigned max_l)
{
  const std::size_t d = c.dim();
  if (n.rows() != d || n.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "operator size does not match the algebra");
  for (std::size_t j = 0; j < casimirs.size(); ++j) {
    require_vars(casimirs[j], d);
    for (std::size_t i = 0; i < d; ++i)
      if (!poisson_bracket_poly(c, casimirs[j], MultiPoly::variable(d, i)).is_zero())
        throw Error(ErrorCode::NotACasimir, "function " + std::to_string(j) + " is not a Casimir",
                    {{"casimir", j}, {"coordinate", i}});
  }

  // xi_i -> sum_j t^j ((N^T)^j xi)_i
  const std::size_t nv = d + 1;
  std::vector<MultiPoly> images(d, MultiPoly(nv));
  const Matrix nt = n.transpose();
  Matrix pw = Matrix::identity(d);
  for (unsigned j = 0; j <= max_l; ++j) {
    MultiPoly tpow(nv);
    Monomial m(nv, 0);
    m[d] = j;
    tpow.add_term(m, 1);
    for (std::size_t i = 0; i < d; ++i) {
      Vector row(nv);
      for (std::size_t k = 0; k < d; ++k)
        row[k] = pw(i, k);
      images[i] += MultiPoly::linear(row) * tpow;
    }
    pw = pw * nt;
  }

  IntegralFamily fam;
  fam.provenance = "casimir-expansion";
  fam.nvars = d;
  for (std::size_t j = 0; j < casimirs.size(); ++j) {
    const MultiPoly moved = casimirs[j].compose(images).truncate(d, max_l);
    for (unsigned l = 0; l <= max_l; ++l)
      fam.members.push_back({member_name('c', static_cast<unsigned>(j + 1), l), moved.coefficient(d, l),
                             static_cast<unsigned>(j + 1), l});
  }

  const auto grads = gradients(fam);
  const Vector xi = PointSampler(0, 9).point(0, d, 1000);
  const Matrix jac = jacobian_at(grads, xi);
  const std::size_t full = rank(jac);
  for (unsigned order = 0; order <= max_l && !fam.saturation_order; ++order) {
    std::vector<std::vector<MultiPoly>> upto;
    for (std::size_t i = 0; i < fam.members.size(); ++i)
      if (fam.members[i].l <= order)
        upto.push_back(grads[i]);
    if (rank(jacobian_at(upto, xi)) == full)
      fam.saturation_order = order;
  }
  return fam;
}

InvolutivityReport involutivity_check(const IntegralFamily& f, const BracketPencil& p)
{
  const std::size_t m = f.members.size();
  for (const auto& mem : f.members)
    require_vars(mem.poly, p.dim());
  std::vector<std::vector<MultiPoly>> grads = gradients(f);
  std::vector<std::vector<MultiPoly>> field1, field2;
  for (const auto& g : grads) {
    field1.push_back(poisson_rows(p.c1(), g));
    field2.push_back(poisson_rows(p.c2(), g));
  }
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      index.emplace_back(i, j);
  InvolutivityReport rep;
  rep.members = m;
  rep.pairs = parallel_map<PairBracket>(index.size(), [&](std::size_t q) {
    auto [i, j] = index[q];
    PairBracket pb;
    pb.i = i;
    pb.j = j;
    const MultiPoly b1 = contract(grads[i], field1[j], p.dim());
    const MultiPoly b2 = contract(grads[i], field2[j], p.dim());
    pb.terms_first = b1.size();
    pb.terms_second = b2.size();
    pb.zero_first = b1.is_zero();
    pb.zero_second = b2.is_zero();
    return pb;
  });
  for (const auto& pb : rep.pairs)
    rep.involutive = rep.involutive && pb.zero_first && pb.zero_second;
  return rep;
}

LenardReport lenard_check(std::size_t n, const Matrix& a, const BracketPencil& p)
{
  if (p.dim() != n * n)
    throw Error(ErrorCode::DimensionMismatch, "pencil is not on gl_" + std::to_string(n));
  LenardReport rep;
  rep.repeated_eigenvalues = has_repeated_diagonal(a);
  const IntegralFamily h = manakov_family(n, a);
  const IntegralFamily f = resolvent_family(n, a, n > 0 ? static_cast<unsigned>(n - 1) : 0);
  auto find = [](const IntegralFamily& fam, unsigned k, unsigned l) -> const MultiPoly& {
    for (const auto& m : fam.members)
      if (m.k == k && m.l == l)
        return m.poly;
    throw Error(ErrorCode::Internal, "missing family member");
  };
  auto compare = [&](unsigned rel, unsigned k, unsigned l, const MultiPoly& upper, const MultiPoly& lower) {
    const auto lhs = hamiltonian_field(p.c1(), upper);
    const auto rhs = hamiltonian_field(p.c2(), lower);
    LenardRelation r{rel, k, l, true, std::nullopt};
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (!(lhs[i] == rhs[i])) {
        r.holds = false;
        r.first_difference = i;
        break;
      }
    rep.relations.push_back(r);
  };
  for (unsigned k = 1; k + 1 <= n; ++k)
    for (unsigned l = 0; l < k; ++l)
      compare(1, k, l, find(h, k + 1, l + 1), find(h, k, l));
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned l = 0; l + 1 < k; ++l)
      compare(2, k, l, find(f, k, l + 1), find(f, k, l));
  rep.holds = true;
  for (const auto& r : rep.relations)
    rep.holds = rep.holds && r.holds;
  return rep;
}

std::vector<std::vector<MultiPoly>> gradients(const IntegralFamily& f)
{
  std::vector<std::vector<MultiPoly>> out;
  for (const auto& m : f.members)
    out.push_back(all_derivatives(m.poly));
  return out;
}

Matrix jacobian_at(const std::vector<std::vector<MultiPoly>>& grads, const Vector& xi)
{
  Matrix j(grads.size(), xi.size());
  for (std::size_t r = 0; r < grads.size(); ++r)
    for (std::size_t c = 0; c < xi.size(); ++c)
      j(r, c) = grads[r][c].evaluate(xi);
  return j;
}

CompletenessReport completeness_rank(const IntegralFamily& f, const BracketPencil& p, const PointSamplerConfig& cfg)
{
  cfg.validate();
  for (const auto& mem : f.members)
    require_vars(mem.poly, p.dim());
  CompletenessReport rep;
  rep.dim = p.dim();
  rep.index = certified_index(p.c1(), cfg).index;
  rep.target = (rep.dim + rep.index) / 2;
  const auto grads = gradients(f);
  const PointSampler sampler(cfg.seed, 4);
  const auto ranks = parallel_map<std::size_t>(cfg.samples, [&](std::size_t k) {
    return rank(jacobian_at(grads, sampler.point(k, rep.dim, cfg.coord_bound)));
  });
  for (std::size_t k = 0; k < ranks.size(); ++k)
    if (k == 0 || ranks[k] > rep.max_rank) {
      rep.max_rank = ranks[k];
      rep.witness = sampler.point(k, rep.dim, cfg.coord_bound);
    }
  rep.complete = rep.max_rank == rep.target;
  return rep;
}

SpanEquivalenceReport family_span_equivalence(const IntegralFamily& f1, const IntegralFamily& f2,
                                              const PointSamplerConfig& cfg)
{
  cfg.validate();
  if (f1.nvars != f2.nvars)
    throw Error(ErrorCode::DimensionMismatch, "families live on different coordinate spaces");
  const auto g1 = gradients(f1);
  const auto g2 = gradients(f2);
  auto both = g1;
  both.insert(both.end(), g2.begin(), g2.end());
  const PointSampler sampler(cfg.seed, 5);
  SpanEquivalenceReport rep;
  rep.samples = parallel_map<SpanSample>(cfg.samples, [&](std::size_t k) {
    SpanSample s;
    s.point = sampler.point(k, f1.nvars, cfg.coord_bound);
    s.rank_first = rank(jacobian_at(g1, s.point));
    s.rank_second = rank(jacobian_at(g2, s.point));
    s.rank_union = rank(jacobian_at(both, s.point));
    return s;
  });
  rep.equivalent = true;
  for (const auto& s : rep.samples)
    rep.equivalent = rep.equivalent && s.equal();
  return rep;
}

bool family_contains(const IntegralFamily& f, const MultiPoly& g)
{
  require_vars(g, f.nvars);
  std::map<Monomial, std::size_t, GradedLex> slot;
  auto index_terms = [&](const MultiPoly& p) {
    for (const auto& [m, c] : p.terms())
      slot.try_emplace(m, slot.size());
  };
  for (const auto& m : f.members)
    index_terms(m.poly);
  index_terms(g);
  auto as_vector = [&](const MultiPoly& p) {
    Vector v(slot.size());
    for (const auto& [m, c] : p.terms())
      v[slot.at(m)] = c;
    return v;
  };
  std::vector<Vector> rows;
  for (const auto& m : f.members)
    rows.push_back(as_vector(m.poly));
  const std::size_t base = rank_of(rows, slot.size());
  rows.push_back(as_vector(g));
  return rank_of(rows, slot.size()) == base;
}

}  // namespace pforge
