#include "pencil_analysis.hpp"

#include "errors.hpp"

#include <algorithm>

namespace pforge {

namespace {

constexpr std::uint64_t kGenericStream = 2;
constexpr std::uint64_t kMemberStream = 100;
constexpr std::uint64_t kCovectorStream = 200;

std::size_t member_rank(const StructureConstants& member, const Vector& xi)
{
  return rank(lie_poisson_matrix(member, xi));
}

bool is_exceptional(const BracketPencil& p, const Rational& lambda)
{
  return std::binary_search(p.exceptional().begin(), p.exceptional().end(), lambda);
}

MemberRank search_member(const BracketPencil& p, const Rational& s1, const Rational& s2, std::size_t target,
                         const PointSamplerConfig& cfg, std::uint64_t stream)
{
  MemberRank m;
  m.s1 = s1;
  m.s2 = s2;
  const StructureConstants member = p.member(s1, s2);
  if (member.is_zero() && p.degenerate()) {
    m.zero_member = true;
    m.reached = true;
    return m;
  }
  const std::size_t n = p.dim();
  PointSampler sampler(cfg.seed, stream);
  std::uint64_t used = 0;
  for (auto bound : bound_schedule(cfg.coord_bound)) {
    auto ranks = parallel_map<std::size_t>(cfg.samples, [&](std::size_t k) {
      return member_rank(member, sampler.point(k, n, bound));
    });
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      ++used;
      m.best_rank = std::max(m.best_rank, ranks[k]);
      if (ranks[k] == target) {
        m.reached = true;
        m.witness = sampler.point(k, n, bound);
        m.samples_used = used;
        m.bound_used = bound;
        return m;
      }
    }
    m.bound_used = bound;
  }
  m.samples_used = used;
  return m;
}

void require_diagonalizable(const std::vector<Eigenspace>& spaces)
{
  for (const auto& e : spaces)
    if (e.riesz_index != 1)
      throw Error(ErrorCode::NotDiagonalizable, "operator is not diagonalizable",
                  {{"eigenvalue", to_string(e.eigenvalue)}, {"riesz_index", e.riesz_index}});
}

}  // namespace

std::size_t pencil_rank_at(const BracketPencil& p, const Rational& s1, const Rational& s2, const Vector& xi)
{
  if (sgn(s1) == 0 && sgn(s2) == 0)
    throw Error(ErrorCode::ZeroParameter, "pencil parameter s must be nonzero");
  return member_rank(p.member(s1, s2), xi);
}

GenericRank generic_rank(const BracketPencil& p, const PointSamplerConfig& cfg)
{
  cfg.validate();
  const std::size_t n = p.dim();
  PointSampler sampler(cfg.seed, kGenericStream);
  auto lambda_of = [&](std::size_t k) {
    Rational lambda = sampler.scalar(k, 0, cfg.coord_bound);
    for (std::uint64_t salt = 1; is_exceptional(p, lambda); ++salt)
      lambda = sampler.scalar(k, salt, cfg.coord_bound);
    return lambda;
  };
  auto ranks = parallel_map<std::size_t>(cfg.samples, [&](std::size_t k) {
    return member_rank(p.member(-lambda_of(k), 1), sampler.point(k, n, cfg.coord_bound));
  });
  auto best = static_cast<std::size_t>(std::max_element(ranks.begin(), ranks.end()) - ranks.begin());
  return GenericRank{ranks[best], lambda_of(best), sampler.point(best, n, cfg.coord_bound)};
}

const char* verdict_name(KroneckerVerdict v)
{
  return v == KroneckerVerdict::CertifiedKronecker ? "CERTIFIED_KRONECKER" : "UNDECIDED";
}

const char* verdict_name(CriterionVerdict v)
{
  return v == CriterionVerdict::FoundAll ? "FOUND_ALL" : "NOT_FOUND_WITHIN_BUDGET";
}

PencilRankProfile kronecker_certify(const BracketPencil& p, const PointSamplerConfig& cfg)
{
  cfg.validate();
  PencilRankProfile out;
  out.dim = p.dim();
  out.samples = cfg.samples;
  out.coord_bound = cfg.coord_bound;
  out.seed = cfg.seed;
  out.degenerate = p.degenerate();

  GenericRank g = generic_rank(p, cfg);
  out.generic_rank = g.rank;
  out.generic_lambda = g.lambda;
  out.generic_witness = g.xi;
  out.index_upper_bound = algebra_index(p.c1(), cfg).index;
  out.generic_matches_index = out.generic_rank == out.dim - out.index_upper_bound;

  bool all = true;
  for (std::size_t i = 0; i < p.exceptional().size(); ++i) {
    const Rational& lambda = p.exceptional()[i];
    MemberRank m = search_member(p, -lambda, 1, g.rank, cfg, kMemberStream + 1 + i);
    m.lambda = lambda;
    all = all && m.reached;
    out.per_exceptional.push_back(std::move(m));
  }
  out.infinity_member = search_member(p, 1, 0, g.rank, cfg, kMemberStream);
  all = all && out.infinity_member.reached;
  out.verdict = all ? KroneckerVerdict::CertifiedKronecker : KroneckerVerdict::Undecided;
  return out;
}

CoisotropyReport corollary_condition(const StructureConstants& c, const OperatorMatrix& n,
                                     const PointSamplerConfig& cfg)
{
  cfg.validate();
  auto spaces = spectrum_and_eigenspaces(n);
  require_diagonalizable(spaces);
  CoisotropyReport out;
  out.algebra_index = certified_index(c, cfg).index;
  out.corollary_holds = true;
  for (const auto& e : spaces) {
    EigenvalueCriterion ec;
    ec.lambda = e.eigenvalue;
    ec.subalgebra = image_subalgebra(c, n, e.eigenvalue);
    ec.codim = c.dim() - ec.subalgebra.dim();
    ec.subalgebra_index = algebra_index(subalgebra_restrict(c, ec.subalgebra), cfg).index;
    ec.corollary_holds = ec.subalgebra_index + ec.codim == out.algebra_index;
    out.corollary_holds = out.corollary_holds && ec.corollary_holds;
    out.eigenvalues.push_back(std::move(ec));
  }
  return out;
}

CoisotropyReport theorem_criterion(const StructureConstants& c, const OperatorMatrix& n,
                                   const PointSamplerConfig& cfg, std::uint32_t search_budget)
{
  CoisotropyReport out = corollary_condition(c, n, cfg);
  out.theorem_evaluated = true;
  bool all = true;
  const auto schedule = bound_schedule(cfg.coord_bound);
  for (std::size_t i = 0; i < out.eigenvalues.size(); ++i) {
    EigenvalueCriterion& ec = out.eigenvalues[i];
    ec.searched = true;
    const std::size_t q = ec.codim;
    PointSampler sampler(cfg.seed, kCovectorStream + i);
    for (std::uint32_t t = 0; t <= search_budget; ++t) {
      if (t > 0 && q == 0)
        break;
      Vector a = zeros(q);
      if (t > 0) {
        std::size_t stage = static_cast<std::size_t>(t - 1) * schedule.size() / std::max<std::uint32_t>(search_budget, 1);
        a = sampler.point(t, q, schedule[std::min(stage, schedule.size() - 1)]);
        if (is_zero(a))
          continue;
      }
      ++ec.attempts;
      CoisotropyNumbers cn = coisotropy_numbers(c, ec.subalgebra, a, cfg);
      ec.complement = cn.complement;
      if (cn.ind_a + cn.codim_a == out.algebra_index) {
        ec.covector = a;
        ec.ind_c = cn.ind_a;
        ec.codim_c = cn.codim_a;
        ec.criterion_holds = true;
        break;
      }
      if (!ec.covector || cn.ind_a + cn.codim_a < ec.ind_c + ec.codim_c) {
        ec.ind_c = cn.ind_a;
        ec.codim_c = cn.codim_a;
        ec.covector = a;
      }
    }
    all = all && ec.criterion_holds;
  }
  out.verdict = all ? CriterionVerdict::FoundAll : CriterionVerdict::NotFoundWithinBudget;
  return out;
}

}  // namespace pforge
