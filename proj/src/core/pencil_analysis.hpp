#pragma once

#include "nijenhuis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pforge {

// Rank of the Lie-Poisson matrix of s1 c1 + s2 c2 at xi. Throws Error(ZeroParameter) for s = (0,0).
std::size_t pencil_rank_at(const BracketPencil& p, const Rational& s1, const Rational& s2, const Vector& xi);

struct GenericRank {
  std::size_t rank = 0;
  Rational lambda;  // member s = (-lambda, 1)
  Vector xi;
};

// Max rank over sampled (lambda not exceptional, xi).
GenericRank generic_rank(const BracketPencil& p, const PointSamplerConfig& cfg);

struct MemberRank {
  std::optional<Rational> lambda;  // nullopt for the s = (1,0) member
  Rational s1, s2;
  std::size_t best_rank = 0;
  std::optional<Vector> witness;  // set when best_rank reached the generic rank
  std::uint64_t samples_used = 0;
  std::uint64_t bound_used = 0;
  bool zero_member = false;  // identically zero member of a degenerate pencil, skipped
  bool reached = false;
};

enum class KroneckerVerdict { CertifiedKronecker, Undecided };
const char* verdict_name(KroneckerVerdict v);

struct PencilRankProfile {
  std::size_t dim = 0;
  std::size_t generic_rank = 0;
  Rational generic_lambda;
  Vector generic_witness;
  std::vector<MemberRank> per_exceptional;
  MemberRank infinity_member;
  std::size_t index_upper_bound = 0;  // dim - sampled max rank of c1
  bool generic_matches_index = false;
  bool degenerate = false;
  std::uint32_t samples = 0;
  std::uint64_t coord_bound = 0;
  std::uint64_t seed = 0;
  KroneckerVerdict verdict = KroneckerVerdict::Undecided;
};

// Certified iff every exceptional member and the s = (1,0) member reach the
// generic rank at some witness point (lower semicontinuity makes each witness
// a proof that the member has that rank on an open dense set).
PencilRankProfile kronecker_certify(const BracketPencil& p, const PointSamplerConfig& cfg);

struct EigenvalueCriterion {
  Rational lambda;
  SubspaceBasis subalgebra;  // im(N - lambda)
  std::size_t codim = 0;
  std::size_t subalgebra_index = 0;
  bool corollary_holds = false;
  // Theorem search, filled by theorem_criterion only.
  bool searched = false;
  std::optional<Vector> covector;  // in the dual of the complement basis
  std::vector<std::size_t> complement;
  std::size_t ind_c = 0;
  std::size_t codim_c = 0;
  std::size_t attempts = 0;
  bool criterion_holds = false;
};

enum class CriterionVerdict { FoundAll, NotFoundWithinBudget };
const char* verdict_name(CriterionVerdict v);

struct CoisotropyReport {
  std::size_t algebra_index = 0;
  std::vector<EigenvalueCriterion> eigenvalues;
  bool corollary_holds = false;
  bool theorem_evaluated = false;
  CriterionVerdict verdict = CriterionVerdict::NotFoundWithinBudget;
};

// Requires a diagonalizable operator with rational spectrum (Error(NotDiagonalizable) otherwise).
CoisotropyReport corollary_condition(const StructureConstants& c, const OperatorMatrix& n,
                                     const PointSamplerConfig& cfg);

CoisotropyReport theorem_criterion(const StructureConstants& c, const OperatorMatrix& n,
                                   const PointSamplerConfig& cfg, std::uint32_t search_budget);

}  // namespace pforge
