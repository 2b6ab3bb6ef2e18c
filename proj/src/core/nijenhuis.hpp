#pragma once

#include "lie_core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pforge {

// Linear endomorphism of g, column action: (N x)_i = sum_j N(i, j) x_j.
using OperatorMatrix = Matrix;

// T(e_i, e_j) = [Ne_i, Ne_j] - N([Ne_i, e_j] + [e_i, Ne_j]) + N^2 [e_i, e_j]
struct TorsionTensor {
  StructureConstants values;
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero;
  bool is_zero() const noexcept { return !first_nonzero.has_value(); }
};

TorsionTensor torsion(const StructureConstants& c, const OperatorMatrix& n);

// [x,y]_N = [Nx,y] + [x,Ny] - N[x,y]. Requires zero torsion unless
// allow_nonzero_torsion is set, in which case the result is Jacobi-checked
// and Error(JacobiFailure) is thrown if it is not a Lie bracket.
StructureConstants deformed_bracket(const StructureConstants& c, const OperatorMatrix& n,
                                    bool allow_nonzero_torsion = false);

enum class PencilOrigin { FromOperator, Outer, Manual };
const char* origin_name(PencilOrigin o);
PencilOrigin parse_origin(const std::string& s);

// Two compatible brackets spanning s1 c1 + s2 c2.
class BracketPencil {
public:
  // Validates Jacobi at s = (1,0), (0,1), (1,1); the Jacobiator is quadratic
  // in s so this forces it to vanish identically.
  BracketPencil(StructureConstants c1, StructureConstants c2, std::vector<Rational> exceptional, PencilOrigin origin);

  const StructureConstants& c1() const noexcept { return c1_; }
  const StructureConstants& c2() const noexcept { return c2_; }
  const std::vector<Rational>& exceptional() const noexcept { return exceptional_; }
  PencilOrigin origin() const noexcept { return origin_; }
  std::size_t dim() const noexcept { return c1_.dim(); }
  // c1 and c2 are linearly dependent: every nonzero member is a multiple of one bracket.
  bool degenerate() const noexcept { return degenerate_; }

  StructureConstants member(const Rational& s1, const Rational& s2) const
  {
    return StructureConstants::combine(s1, c1_, s2, c2_);
  }

private:
  StructureConstants c1_;
  StructureConstants c2_;
  std::vector<Rational> exceptional_;
  PencilOrigin origin_;
  bool degenerate_ = false;
};

BracketPencil pencil_of(const StructureConstants& c, const OperatorMatrix& n);

// (N - lambda)^{-1} [(N - lambda)x, (N - lambda)y] == [x,y]_N - lambda [x,y] on all basis pairs.
// Throws Error(Singular) when lambda is an eigenvalue.
bool resolvent_identity_check(const StructureConstants& c, const OperatorMatrix& n, const Rational& lambda);

// Monic characteristic polynomial det(x - N), coefficients from x^0 upward.
std::vector<Rational> characteristic_polynomial(const OperatorMatrix& n);

struct RationalRoots {
  std::vector<std::pair<Rational, std::size_t>> roots;  // root, multiplicity (ascending)
  std::vector<Rational> remainder;                       // factor with no rational roots
};

RationalRoots rational_roots(const std::vector<Rational>& poly);

struct Eigenspace {
  Rational eigenvalue;
  SubspaceBasis basis;  // ker (N - eigenvalue)^riesz_index
  unsigned riesz_index = 1;
};

// Throws Error(IrrationalSpectrum) when the characteristic polynomial does not split over Q.
std::vector<Eigenspace> spectrum_and_eigenspaces(const OperatorMatrix& n);
std::vector<Rational> rational_spectrum(const OperatorMatrix& n);
bool is_diagonalizable(const std::vector<Eigenspace>& spaces);

OperatorMatrix operator_from_decomposition(const StructureConstants& c, const std::vector<SubspaceBasis>& parts,
                                           const std::vector<Rational>& eigenvalues);

// Canonical basis of im(N - lambda), checked to be a subalgebra.
SubspaceBasis image_subalgebra(const StructureConstants& c, const OperatorMatrix& n, const Rational& lambda);

// (s1 N + s2) (s3 N + s4)^{-1}; throws Error(Singular) if the denominator is singular.
OperatorMatrix linear_fractional(const OperatorMatrix& n, const Rational& s1, const Rational& s2, const Rational& s3,
                                 const Rational& s4);

OperatorMatrix shifted(const OperatorMatrix& n, const Rational& lambda);

}  // namespace pforge
