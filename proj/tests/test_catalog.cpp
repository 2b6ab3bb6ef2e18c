#include "catalog.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "pencil_analysis.hpp"

#include <doctest.h>

using namespace pforge;

namespace {

PointSamplerConfig cfg()
{
  PointSamplerConfig c;
  c.samples = 16;
  return c;
}

ErrorCode code_of(const std::string& name, const nlohmann::json& params)
{
  try {
    build(name, params);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("catalog")
{
  TEST_CASE("every catalog entry builds with default parameters")
  {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      const auto e = build(name);
      CHECK(check_jacobi(e.algebra).empty());
      if (e.op)
        CHECK(torsion(e.algebra, *e.op).is_zero());
    }
  }

  TEST_CASE("gl_n matches the commutator oracle")
  {
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(build("gl", {{"n", n}}).algebra == oracle::gl(n));
  }

  TEST_CASE("sl_2")
  {
    const auto e = build("sl", {{"n", 2}});
    CHECK(e.algebra.dim() == 3);
    CHECK(check_jacobi(e.algebra).empty());
    CHECK(certified_index(e.algebra, cfg()).index == 1);
    CHECK(e.algebra.labels() == std::vector<std::string>{"E12", "H1", "E21"});
  }

  TEST_CASE("sl_n and so_n dimensions and indices")
  {
    CHECK(build("sl", {{"n", 3}}).algebra.dim() == 8);
    CHECK(certified_index(build("sl", {{"n", 3}}).algebra, cfg()).index == 2);
    const auto so4 = build("so", {{"n", 4}}).algebra;
    CHECK(so4.dim() == 6);
    CHECK(certified_index(so4, cfg()).index == 2);
  }

  TEST_CASE("outer pencil on so_3")
  {
    const auto e = build("outer_pencil", {{"n", 3}, {"A", {1, 2, 3}}});
    REQUIRE(e.pencil);
    CHECK(e.algebra == build("so", {{"n", 3}}).algebra);
    CHECK(check_jacobi(e.pencil->c1()).empty());
    CHECK(check_jacobi(e.pencil->c2()).empty());
    CHECK(check_jacobi(e.pencil->member(1, 1)).empty());
    CHECK(e.pencil->exceptional() == std::vector<Rational>{1, 2, 3});
    CHECK(e.pencil->origin() == PencilOrigin::Outer);
    // c2 is BAC - CAB on the matrices S_ij
    const auto basis = so_basis(3);
    const Matrix a = oracle::diag({1, 2, 3});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Matrix expect(3, 3);
        const Vector coeffs = e.pencil->c2().bracket_basis(i, j);
        for (std::size_t k = 0; k < 3; ++k)
          expect = expect + coeffs[k] * basis[k];
        CHECK(expect == basis[i] * a * basis[j] - basis[j] * a * basis[i]);
      }
  }

  TEST_CASE("outer pencil with a non-identity form")
  {
    const auto e = build("outer_pencil", {{"n", 2}, {"A", {1, 2}}, {"I", {1, -1}}});
    CHECK(e.algebra.dim() == 1);
    const auto e3 = build("outer_pencil", {{"n", 3}, {"A", {1, 2, 3}}, {"I", {1, 1, -1}}});
    CHECK(e3.algebra.dim() == 3);
    CHECK(check_jacobi(e3.pencil->c2()).empty());
    CHECK(code_of("outer_pencil", {{"n", 2}, {"A", {{0, 1}, {0, 0}}}}) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("sl_2 projector: deformed algebra is non-abelian while im N has point orbits")
  {
    const auto e = build("sl2_projector");
    REQUIRE(e.pencil);
    const auto& deformed = e.pencil->c2();
    CHECK_FALSE(deformed.is_zero());
    CHECK(3 - algebra_index(deformed, cfg()).index == 2);
    const auto img = image_subalgebra(e.algebra, *e.op, 0);
    CHECK(img.dim() == 1);
    const auto restricted = subalgebra_restrict(e.algebra, img);
    CHECK(algebra_index(restricted, cfg()).index == restricted.dim());
  }

  TEST_CASE("Borel projector parameters")
  {
    const auto e = build("borel_projector", {{"n", 3}, {"lambda1", "1/2"}, {"lambda2", 3}});
    CHECK(pencil_of(e.algebra, *e.op).exceptional() == std::vector<Rational>{Rational(1, 2), 3});
    CHECK(code_of("borel_projector", {{"n", 2}, {"lambda1", 1}, {"lambda2", 1}}) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("left multiplication parameters")
  {
    CHECK(build("left_mult", {{"n", 2}}).pencil->exceptional() == std::vector<Rational>{1, 2});
    CHECK(code_of("left_mult", {{"n", 2}, {"A", {{1, 1}, {0, 2}}}}) == ErrorCode::InvalidArgument);
    const auto general = build("left_mult", {{"n", 2}, {"A", {{1, 1}, {0, 2}}}, {"general", true}});
    CHECK(torsion(general.algebra, *general.op).is_zero());
    CHECK(code_of("left_mult", {{"n", 0}}) == ErrorCode::InvalidArgument);
    CHECK(code_of("left_mult", {{"n", 2}, {"A", {1}}}) == ErrorCode::Parse);
  }

  TEST_CASE("affine algebras")
  {
    const auto aff1 = build("affine", {{"n", 1}}).algebra;
    CHECK(aff1.dim() == 2);
    CHECK(aff1(0, 1, 1) == 1);
    CHECK(algebra_index(build("affine", {{"n", 2}}).algebra, cfg()).index == 0);
  }

  TEST_CASE("unknown names and bad parameters")
  {
    CHECK(code_of("e8", nlohmann::json::object()) == ErrorCode::UnknownName);
    CHECK(code_of("gl", {{"n", -1}}) == ErrorCode::InvalidArgument);
    CHECK(code_of("gl", nlohmann::json::array()) == ErrorCode::Parse);
  }

  TEST_CASE("matrix_algebra rejects spans that are not closed")
  {
    const auto units = gl_basis(2);
    CHECK_THROWS_AS(matrix_algebra({units[1], units[2]}, {"a", "b"}), Error);
  }
}
