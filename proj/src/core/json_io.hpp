#pragma once

#include "integrals.hpp"
#include "nijenhuis.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace pforge {

using nlohmann::json;

// All parsers throw Error(Parse) naming the JSON pointer of the offending field.
Rational rational_from_json(const json& j, const std::string& pointer);
json rational_to_json(const Rational& r);

Vector vector_from_json(const json& j, std::size_t expected_len, const std::string& pointer);
json vector_to_json(const Vector& v);
Matrix matrix_from_json(const json& j, std::size_t n, const std::string& pointer);
json matrix_to_json(const Matrix& m);

// {"dim": n, "labels": [...], "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}
// Entries with i < j are completed antisymmetrically; other entries are stored
// verbatim so that check_jacobi can report them.
StructureConstants algebra_from_json(const json& j, const std::string& pointer = "");
json algebra_to_json(const StructureConstants& c);

// {"dim": n, "matrix": [[...], ...]}
OperatorMatrix operator_from_json(const json& j, std::size_t expected_dim, const std::string& pointer = "");
json operator_to_json(const OperatorMatrix& m);

// List of length-n vectors.
std::vector<Vector> subspace_from_json(const json& j, std::size_t n, const std::string& pointer = "");

// {"c1": algebra, "c2": algebra, "exceptional": [...], "origin": "manual"}
BracketPencil pencil_from_json(const json& j);
json pencil_to_json(const BracketPencil& p);

// {"provenance", "nvars", "members": [{"name", "k", "l", "terms": [{"exps", "coeff"}]}]}
IntegralFamily family_from_json(const json& j);
json family_to_json(const IntegralFamily& f);
MultiPoly poly_from_json(const json& j, std::size_t nvars, const std::string& pointer);
json poly_to_json(const MultiPoly& p);

// {"dim": dimV, "matrices": [dimV x dimV matrices, one per basis element of h]}
std::pair<Representation, std::size_t> representation_from_json(const json& j, std::size_t h_dim);
json representation_to_json(const Representation& r, std::size_t dim_v);

}  // namespace pforge
