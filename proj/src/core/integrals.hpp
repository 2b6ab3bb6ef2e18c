#pragma once

#include "nijenhuis.hpp"
#include "poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pforge {

struct FamilyMember {
  std::string name;
  MultiPoly poly;
  unsigned k = 0;
  unsigned l = 0;
};

struct IntegralFamily {
  std::string provenance;  // manakov | resolvent | borel | casimir-expansion | manual
  std::size_t nvars = 0;
  std::vector<FamilyMember> members;
  std::vector<std::string> warnings;
  // Casimir expansions: smallest order l whose members already reach the
  // gradient rank of the whole family at a sampled point.
  std::optional<unsigned> saturation_order;

  // Throws Error(InvalidArgument) on duplicate names or mismatched variable counts.
  void validate() const;
};

// {f,g}(xi) = sum_ij Pi_ij(xi) d_i f d_j g
MultiPoly poisson_bracket_poly(const StructureConstants& c, const MultiPoly& f, const MultiPoly& g);
MultiPoly poisson_bracket_poly(const BracketPencil& p, const Rational& s1, const Rational& s2, const MultiPoly& f,
                               const MultiPoly& g);

// component_i = sum_j Pi_ij(xi) d_j f, so that sum_i d_i g * component_i = {g, f}.
std::vector<MultiPoly> hamiltonian_field(const StructureConstants& c, const MultiPoly& f);
std::vector<MultiPoly> hamiltonian_field(const BracketPencil& p, const Rational& s1, const Rational& s2,
                                         const MultiPoly& f);

// Coordinates on gl_n^* are x_ab = xi(E_ab) in row-major order.
// h_{k,l}: coefficient of lambda^l in (1/k) Tr (x + lambda A)^k, k = 1..n, l = 0..k-1.
IntegralFamily manakov_family(std::size_t n, const Matrix& a);

// f_{k,l}: coefficient of t^l in Tr (sum_j t^j A^j x)^k. l runs up to min(k-1, max_l),
// or up to max_l when `beyond_degree` is set.
IntegralFamily resolvent_family(std::size_t n, const Matrix& a, unsigned max_l, bool beyond_degree = false);

// Coefficients in lambda of Tr ((N + lambda) x)^k, k = 2..n, for sl_n with the
// +-1 Borel projector (N = 1 on strictly lower, -1 on the rest); zero coefficients are dropped.
// Coordinates are those of the sl_n catalog basis.
IntegralFamily borel_family(std::size_t n);

// Matrix of sl_n^* coordinates: x in sl_n with <x, B_m> = xi_m (Frobenius pairing).
std::vector<MultiPoly> sl_matrix_entries(std::size_t n);

// Coefficients of t^0..t^max_l of C_j(sum_i t^i (N^T)^i xi). Every C_j must
// Poisson-commute with all coordinates under c (Error(NotACasimir) otherwise).
IntegralFamily casimir_resolvent_family(const StructureConstants& c, const OperatorMatrix& n,
                                        const std::vector<MultiPoly>& casimirs, unsigned max_l);

struct PairBracket {
  std::size_t i = 0, j = 0;
  bool zero_first = true;   // under c1
  bool zero_second = true;  // under c2
  std::size_t terms_first = 0;
  std::size_t terms_second = 0;
};

struct InvolutivityReport {
  std::size_t members = 0;
  std::vector<PairBracket> pairs;
  bool involutive = true;
};

InvolutivityReport involutivity_check(const IntegralFamily& f, const BracketPencil& p);

struct LenardRelation {
  unsigned relation = 1;  // 1: h family, 2: f family
  unsigned k = 0, l = 0;
  bool holds = false;
  std::optional<std::size_t> first_difference;  // component index
};

struct LenardReport {
  std::vector<LenardRelation> relations;
  bool repeated_eigenvalues = false;
  bool holds = false;
};

// p must be the gl_n pencil of N = L_A.
LenardReport lenard_check(std::size_t n, const Matrix& a, const BracketPencil& p);

struct CompletenessReport {
  std::size_t max_rank = 0;
  std::size_t dim = 0;
  std::size_t index = 0;
  std::size_t target = 0;
  Vector witness;
  bool complete = false;
};

CompletenessReport completeness_rank(const IntegralFamily& f, const BracketPencil& p, const PointSamplerConfig& cfg);

struct SpanSample {
  Vector point;
  std::size_t rank_first = 0, rank_second = 0, rank_union = 0;
  bool equal() const noexcept { return rank_first == rank_second && rank_first == rank_union; }
};

struct SpanEquivalenceReport {
  std::vector<SpanSample> samples;
  bool equivalent = false;
};

SpanEquivalenceReport family_span_equivalence(const IntegralFamily& f1, const IntegralFamily& f2,
                                              const PointSamplerConfig& cfg);

// True iff g lies in the linear span of the members.
bool family_contains(const IntegralFamily& f, const MultiPoly& g);

// Gradients of all members evaluated at xi (one row per member).
Matrix jacobian_at(const std::vector<std::vector<MultiPoly>>& gradients, const Vector& xi);
std::vector<std::vector<MultiPoly>> gradients(const IntegralFamily& f);

}  // namespace pforge
