#include "json_io.hpp"

#include "errors.hpp"

#include <set>

namespace pforge {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what)
{
  const std::string where = pointer.empty() ? "/" : pointer;
  throw Error(ErrorCode::Parse, "at " + where + ": " + what, {{"pointer", where}});
}

const json& field(const json& j, const char* key, const std::string& pointer)
{
  if (!j.is_object())
    fail(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(pointer + "/" + key, "missing field");
  return *it;
}

std::size_t index_value(const json& j, const std::string& pointer)
{
  if (!j.is_number_unsigned())
    fail(pointer, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string sub(const std::string& pointer, std::size_t i)
{
  return pointer + "/" + std::to_string(i);
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& pointer)
{
  if (j.is_number_integer())
    return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned())
    return Rational(std::to_string(j.get<unsigned long long>()));
  if (!j.is_string())
    fail(pointer, "expected a rational string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(pointer, e.what());
  }
}

json rational_to_json(const Rational& r)
{
  return to_string(r);
}

Vector vector_from_json(const json& j, std::size_t expected_len, const std::string& pointer)
{
  if (!j.is_array())
    fail(pointer, "expected an array");
  if (j.size() != expected_len)
    fail(pointer, "expected " + std::to_string(expected_len) + " entries, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], sub(pointer, i)));
  return v;
}

json vector_to_json(const Vector& v)
{
  json out = json::array();
  for (const auto& x : v)
    out.push_back(rational_to_json(x));
  return out;
}

Matrix matrix_from_json(const json& j, std::size_t n, const std::string& pointer)
{
  if (!j.is_array() || j.size() != n)
    fail(pointer, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = vector_from_json(j[r], n, sub(pointer, r));
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = row[c];
  }
  return m;
}

json matrix_to_json(const Matrix& m)
{
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(vector_to_json(m.row(r)));
  return out;
}

StructureConstants algebra_from_json(const json& j, const std::string& pointer)
{
  const std::size_t n = index_value(field(j, "dim", pointer), pointer + "/dim");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& lj = j["labels"];
    if (!lj.is_array() || lj.size() != n)
      fail(pointer + "/labels", "expected " + std::to_string(n) + " label strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!lj[i].is_string())
        fail(sub(pointer + "/labels", i), "expected a string");
      labels.push_back(lj[i].get<std::string>());
    }
  }
  StructureConstants c(n, std::move(labels));
  const auto& bj = field(j, "brackets", pointer);
  if (!bj.is_array())
    fail(pointer + "/brackets", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> listed;
  for (std::size_t e = 0; e < bj.size(); ++e) {
    const std::string ep = sub(pointer + "/brackets", e);
    const std::size_t i = index_value(field(bj[e], "i", ep), ep + "/i");
    const std::size_t jj = index_value(field(bj[e], "j", ep), ep + "/j");
    if (i >= n || jj >= n)
      fail(ep, "basis index out of range");
    if (!listed.insert({i, jj}).second)
      fail(ep, "duplicate bracket entry");
    const auto& coeffs = field(bj[e], "coeffs", ep);
    if (!coeffs.is_object())
      fail(ep + "/coeffs", "expected an object mapping basis index to coefficient");
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      const std::string cp = ep + "/coeffs/" + it.key();
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(it.key(), &used);
        if (used != it.key().size())
          throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(cp, "key must be a basis index");
      }
      if (k >= n)
        fail(cp, "basis index out of range");
      c.at(i, jj, k) = rational_from_json(it.value(), cp);
    }
  }
  for (const auto& [i, jj] : listed)
    if (i < jj && !listed.count({jj, i}))
      for (std::size_t k = 0; k < n; ++k)
        c.at(jj, i, k) = -c(i, jj, k);
  return c;
}

json algebra_to_json(const StructureConstants& c)
{
  json out;
  const std::size_t n = c.dim();
  out["dim"] = n;
  if (!c.labels().empty())
    out["labels"] = c.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c(i, j, k)) != 0)
          coeffs[std::to_string(k)] = rational_to_json(c(i, j, k));
      if (!coeffs.empty())
        brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  out["brackets"] = brackets;
  return out;
}

OperatorMatrix operator_from_json(const json& j, std::size_t expected_dim, const std::string& pointer)
{
  const std::size_t n = index_value(field(j, "dim", pointer), pointer + "/dim");
  if (n != expected_dim)
    throw Error(ErrorCode::DimensionMismatch,
                "operator has dim " + std::to_string(n) + ", algebra has dim " + std::to_string(expected_dim),
                {{"pointer", pointer + "/dim"}});
  return matrix_from_json(field(j, "matrix", pointer), n, pointer + "/matrix");
}

json operator_to_json(const OperatorMatrix& m)
{
  return {{"dim", m.rows()}, {"matrix", matrix_to_json(m)}};
}

std::vector<Vector> subspace_from_json(const json& j, std::size_t n, const std::string& pointer)
{
  if (!j.is_array())
    fail(pointer, "expected a list of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vector_from_json(j[i], n, sub(pointer, i)));
  return out;
}

BracketPencil pencil_from_json(const json& j)
{
  StructureConstants c1 = algebra_from_json(field(j, "c1", ""), "/c1");
  StructureConstants c2 = algebra_from_json(field(j, "c2", ""), "/c2");
  if (c1.dim() != c2.dim())
    throw Error(ErrorCode::DimensionMismatch, "pencil brackets have different dimensions", {{"pointer", "/c2/dim"}});
  std::vector<Rational> exceptional;
  if (j.contains("exceptional")) {
    const auto& ej = j["exceptional"];
    if (!ej.is_array())
      fail("/exceptional", "expected an array");
    for (std::size_t i = 0; i < ej.size(); ++i)
      exceptional.push_back(rational_from_json(ej[i], sub("/exceptional", i)));
  }
  PencilOrigin origin = PencilOrigin::Manual;
  if (j.contains("origin")) {
    if (!j["origin"].is_string())
      fail("/origin", "expected a string");
    try {
      origin = parse_origin(j["origin"].get<std::string>());
    } catch (const Error& e) {
      fail("/origin", e.what());
    }
  }
  return BracketPencil(std::move(c1), std::move(c2), std::move(exceptional), origin);
}

json pencil_to_json(const BracketPencil& p)
{
  json ex = json::array();
  for (const auto& l : p.exceptional())
    ex.push_back(rational_to_json(l));
  return {{"c1", algebra_to_json(p.c1())},
          {"c2", algebra_to_json(p.c2())},
          {"exceptional", ex},
          {"origin", origin_name(p.origin())}};
}

MultiPoly poly_from_json(const json& j, std::size_t nvars, const std::string& pointer)
{
  if (!j.is_array())
    fail(pointer, "expected a term list");
  MultiPoly p(nvars);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = sub(pointer, t);
    const auto& ej = field(j[t], "exps", tp);
    if (!ej.is_array() || ej.size() != nvars)
      fail(tp + "/exps", "expected " + std::to_string(nvars) + " exponents");
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!ej[v].is_number_unsigned())
        fail(sub(tp + "/exps", v), "expected a non-negative integer");
      m[v] = ej[v].get<std::uint32_t>();
    }
    p.add_term(m, rational_from_json(field(j[t], "coeff", tp), tp + "/coeff"));
  }
  return p;
}

json poly_to_json(const MultiPoly& p)
{
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"exps", m}, {"coeff", rational_to_json(c)}});
  return terms;
}

IntegralFamily family_from_json(const json& j)
{
  IntegralFamily f;
  f.nvars = index_value(field(j, "nvars", ""), "/nvars");
  f.provenance = j.contains("provenance") && j["provenance"].is_string() ? j["provenance"].get<std::string>()
                                                                          : "manual";
  const auto& mj = field(j, "members", "");
  if (!mj.is_array())
    fail("/members", "expected an array");
  for (std::size_t i = 0; i < mj.size(); ++i) {
    const std::string mp = sub("/members", i);
    FamilyMember m;
    const auto& name = field(mj[i], "name", mp);
    if (!name.is_string())
      fail(mp + "/name", "expected a string");
    m.name = name.get<std::string>();
    if (mj[i].contains("k"))
      m.k = static_cast<unsigned>(index_value(mj[i]["k"], mp + "/k"));
    if (mj[i].contains("l"))
      m.l = static_cast<unsigned>(index_value(mj[i]["l"], mp + "/l"));
    m.poly = poly_from_json(field(mj[i], "terms", mp), f.nvars, mp + "/terms");
    f.members.push_back(std::move(m));
  }
  f.validate();
  return f;
}

json family_to_json(const IntegralFamily& f)
{
  json members = json::array();
  for (const auto& m : f.members)
    members.push_back({{"name", m.name}, {"k", m.k}, {"l", m.l}, {"terms", poly_to_json(m.poly)}});
  json out{{"provenance", f.provenance}, {"nvars", f.nvars}, {"members", members}};
  if (!f.warnings.empty())
    out["warnings"] = f.warnings;
  if (f.saturation_order)
    out["saturation_order"] = *f.saturation_order;
  return out;
}

std::pair<Representation, std::size_t> representation_from_json(const json& j, std::size_t h_dim)
{
  const std::size_t dv = index_value(field(j, "dim", ""), "/dim");
  const auto& mj = field(j, "matrices", "");
  if (!mj.is_array() || mj.size() != h_dim)
    fail("/matrices", "expected one matrix per basis element (" + std::to_string(h_dim) + ")");
  Representation rep;
  for (std::size_t i = 0; i < h_dim; ++i)
    rep.push_back(matrix_from_json(mj[i], dv, sub("/matrices", i)));
  return {std::move(rep), dv};
}

json representation_to_json(const Representation& r, std::size_t dim_v)
{
  json mats = json::array();
  for (const auto& m : r)
    mats.push_back(matrix_to_json(m));
  return {{"dim", dim_v}, {"matrices", mats}};
}

}  // namespace pforge
