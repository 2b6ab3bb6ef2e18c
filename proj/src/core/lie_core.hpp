#pragma once

#include "linalg.hpp"
#include "sampling.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pforge {

// Lie algebra in a fixed basis: c(i, j, k) is the coefficient of e_k in [e_i, e_j].
// The tensor is stored densely; nothing is checked on construction, use
// check_jacobi / require_lie before trusting it.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const;

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const
  {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }

  // Sets [e_i, e_j]_k = v and [e_j, e_i]_k = -v.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& v);

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  bool is_zero() const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b)
  {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }
  // s1 * a + s2 * b (labels taken from a).
  static StructureConstants combine(const Rational& s1, const StructureConstants& a,
                                    const Rational& s2, const StructureConstants& b);

private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> data_;
};

struct Violation {
  std::string kind;                  // "antisymmetry" or "jacobi"
  std::vector<std::size_t> indices;  // (i,j,k) or (i,j,k,l)
  Rational residual;
};

struct ViolationReport {
  std::vector<Violation> violations;
  bool truncated = false;
  bool empty() const noexcept { return violations.empty(); }
};

ViolationReport check_jacobi(const StructureConstants& c, std::size_t max_violations = 10);

// Throws Error(InvalidStructureConstants) carrying the first violations.
void require_lie(const StructureConstants& c);

Vector bracket_apply(const StructureConstants& c, const Vector& x, const Vector& y);

// Pi_ij(xi) = sum_k c(i,j,k) xi_k.
Matrix lie_poisson_matrix(const StructureConstants& c, const Vector& xi);

struct IndexResult {
  std::size_t index = 0;     // dim - max sampled rank (an upper bound on ind g)
  std::size_t max_rank = 0;
  Vector witness;            // point attaining max_rank
  std::size_t rounds = 1;    // bound-doubling rounds (certified_index only)
  std::uint64_t coord_bound = 0;
};

IndexResult algebra_index(const StructureConstants& c, const PointSamplerConfig& cfg);

// Repeats algebra_index with doubled coord_bound until two consecutive rounds agree.
IndexResult certified_index(const StructureConstants& c, const PointSamplerConfig& cfg);

// Linearly independent spanning set of a subspace of an n-dimensional space.
class SubspaceBasis {
public:
  SubspaceBasis() = default;
  // Throws Error(InvalidArgument) if the vectors are dependent or have the wrong length.
  SubspaceBasis(std::vector<Vector> vectors, std::size_t ambient_dim);

  static SubspaceBasis full(std::size_t n);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }

  // Columns are the basis vectors.
  Matrix as_matrix() const;
  bool contains(const Vector& v) const;
  // Coordinates of v in this basis, or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

private:
  std::vector<Vector> vectors_;
  std::size_t ambient_ = 0;
};

// Structure constants of the bracket restricted to span(B), in basis B.
// Throws Error(NotASubalgebra) with the offending pair as witness.
StructureConstants subalgebra_restrict(const StructureConstants& c, const SubspaceBasis& b);

// Standard basis vectors completing B to a basis of g, chosen by greedy pivoting.
std::vector<std::size_t> complement_indices(const SubspaceBasis& b);

struct CoisotropyNumbers {
  std::size_t ind_a = 0;
  std::size_t codim_a = 0;
  SubspaceBasis stabilizer;
  std::size_t tangent_rank = 0;
  std::vector<std::size_t> complement;  // standard basis indices spanning g / subalgebra
};

// Infinitesimal coisotropy action of the subalgebra span(B) at a in (g/B)^*,
// where a is expressed in the dual of the complement basis.
CoisotropyNumbers coisotropy_numbers(const StructureConstants& c, const SubspaceBasis& b,
                                     const Vector& a, const PointSamplerConfig& cfg);

// action[i] is the dimV x dimV matrix of the i-th basis element of h.
using Representation = std::vector<Matrix>;

// Throws Error(NotARepresentation) with the first failing pair.
void validate_representation(const StructureConstants& h, const Representation& action, std::size_t dim_v);

// h (+) V with [(x1,x2),(y1,y2)] = ([x1,y1], A(x1)y2 - A(y1)x2); basis h then V.
StructureConstants semidirect_product(const StructureConstants& h, const Representation& action,
                                      std::size_t dim_v);

// Structure constants expressed in the basis formed by the columns of p.
StructureConstants change_basis(const StructureConstants& c, const Matrix& p);

// True iff phi [x,y]_from = [phi x, phi y]_to on all basis pairs.
bool is_homomorphism(const Matrix& phi, const StructureConstants& from, const StructureConstants& to);

struct TwilledTruncation {
  StructureConstants truncated;  // basis (B1, B2)
  Representation a1;             // x1 -> [x1, .]_2 on span(B2)
  Representation a2;             // x2 -> [x2, .]_1 on span(B1)
  StructureConstants g1;         // restriction to B1
  Matrix basis;                  // columns B1 then B2
};

TwilledTruncation twilled_truncate(const StructureConstants& c, const SubspaceBasis& b1, const SubspaceBasis& b2);

struct RaisReport {
  std::size_t lhs_index = 0;         // ind of the semidirect product
  std::size_t orbit_codim = 0;       // codim of O_a in V^*
  std::size_t stabilizer_index = 0;  // ind of h^a
  std::size_t stabilizer_dim = 0;
  Vector witness_a;
  Vector lhs_witness;
  bool holds = false;
};

RaisReport rais_check(const StructureConstants& h, const Representation& action, std::size_t dim_v,
                      const PointSamplerConfig& cfg);

}  // namespace pforge
