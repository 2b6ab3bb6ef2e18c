#pragma once

#include "nijenhuis.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pforge {

// Matrix units E_ab in row-major order (index a*n + b).
std::vector<Matrix> gl_basis(std::size_t n);
// Strictly upper E_ab (row-major), then H_i = E_ii - E_{i+1,i+1}, then strictly lower E_ab.
std::vector<Matrix> sl_basis(std::size_t n);
// E_ij - E_ji for i < j.
std::vector<Matrix> so_basis(std::size_t n);

using MatrixBracket = std::function<Matrix(const Matrix&, const Matrix&)>;
Matrix commutator(const Matrix& x, const Matrix& y);

// Structure constants of `bracket` on span(basis); throws Error(NotASubalgebra)
// if some bracket leaves the span.
StructureConstants matrix_algebra(const std::vector<Matrix>& basis, std::vector<std::string> labels,
                                  const MatrixBracket& bracket = commutator);

// N = L_A on gl_n in the gl_basis ordering.
OperatorMatrix left_multiplication(const Matrix& a);

struct CatalogEntry {
  std::string name;
  nlohmann::json parameters;
  StructureConstants algebra;
  std::optional<OperatorMatrix> op;
  std::optional<BracketPencil> pencil;
  std::vector<Matrix> matrix_basis;  // empty for non-matrix entries
};

std::vector<std::string> catalog_names();

// Throws Error(UnknownName) or Error(InvalidArgument). Every built object is
// validated (Jacobi, torsion, pencil compatibility) before it is returned.
CatalogEntry build(const std::string& name, const nlohmann::json& params = nlohmann::json::object());

}  // namespace pforge
