#include "catalog.hpp"
#include "errors.hpp"
#include "nijenhuis.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace pforge;

namespace {

const std::size_t E = 0, H = 1, F = 2;

StructureConstants sl2()
{
  return build("sl", {{"n", 2}}).algebra;
}

// h -> e: T(h, f) = -e
OperatorMatrix h_to_e()
{
  OperatorMatrix n(3, 3);
  n(E, H) = 1;
  return n;
}

OperatorMatrix left_mult(const Matrix& a)
{
  // independent construction: column (c,d) of L_A is vec(A E_cd)
  const std::size_t n = a.rows();
  OperatorMatrix op(n * n, n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      Matrix unit(n, n);
      unit(c, d) = 1;
      const Vector col = oracle::flatten(a * unit);
      for (std::size_t r = 0; r < n * n; ++r)
        op(r, c * n + d) = col[r];
    }
  return op;
}

}  // namespace

TEST_SUITE("nijenhuis")
{
  TEST_CASE("torsion")
  {
    oracle::Lcg rng{8};
    OperatorMatrix random(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        random(i, j) = Rational(rng.next(5));
    CHECK(torsion(StructureConstants(3), random).is_zero());
    CHECK(torsion(oracle::gl(2), left_mult(oracle::diag({1, 2}))).is_zero());
    const auto t = torsion(sl2(), h_to_e());
    CHECK_FALSE(t.is_zero());
    CHECK_FALSE(t.values.is_zero());
    CHECK_THROWS_AS(torsion(sl2(), OperatorMatrix(2, 2)), Error);
  }

  TEST_CASE("deformed bracket of the identity and zero operators")
  {
    const auto c = oracle::gl(2);
    CHECK(deformed_bracket(c, Matrix::identity(4)) == c);
    CHECK(deformed_bracket(c, Matrix(4, 4)).is_zero());
  }

  TEST_CASE("deformed bracket of left multiplication is xAy - yAx")
  {
    for (std::size_t n = 2; n <= 3; ++n) {
      std::vector<long> d;
      for (std::size_t i = 0; i < n; ++i)
        d.push_back(static_cast<long>(i + 1));
      const Matrix a = oracle::diag(d);
      const auto cn = deformed_bracket(oracle::gl(n), left_mult(a));
      for (std::size_t i = 0; i < n * n; ++i)
        for (std::size_t j = 0; j < n * n; ++j) {
          const Matrix x = oracle::as_square(unit_vector(n * n, i), n);
          const Matrix y = oracle::as_square(unit_vector(n * n, j), n);
          CHECK(cn.bracket_basis(i, j) == oracle::flatten(x * a * y - y * a * x));
        }
    }
  }

  TEST_CASE("deformed bracket refuses torsion unless overridden")
  {
    try {
      deformed_bracket(sl2(), h_to_e());
      FAIL("expected TorsionNonzero");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TorsionNonzero);
      CHECK(e.witness().contains("pair"));
    }
    // the override Jacobi-checks the result: either a Lie bracket or JacobiFailure
    try {
      const auto c = deformed_bracket(sl2(), h_to_e(), true);
      CHECK(check_jacobi(c).empty());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::JacobiFailure);
    }
  }

  TEST_CASE("pencil_of and exceptional values")
  {
    const auto borel = build("borel_projector", {{"n", 2}});
    CHECK(pencil_of(borel.algebra, *borel.op).exceptional() == std::vector<Rational>{-1, 1});
    const auto p = pencil_of(oracle::gl(2), left_mult(oracle::diag({1, 2})));
    CHECK(p.exceptional() == std::vector<Rational>{1, 2});
    CHECK_FALSE(p.degenerate());
    const auto id = pencil_of(oracle::gl(2), Matrix::identity(4));
    CHECK(id.exceptional() == std::vector<Rational>{1});
    CHECK(id.c2() == id.c1());
    CHECK(id.degenerate());
    CHECK_THROWS_AS(pencil_of(sl2(), h_to_e()), Error);
  }

  TEST_CASE("irrational spectrum is rejected with the unsplit factor")
  {
    OperatorMatrix n(2, 2);
    n(0, 1) = 1;
    n(1, 0) = 2;
    try {
      pencil_of(StructureConstants(2), n);
      FAIL("expected IrrationalSpectrum");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IrrationalSpectrum);
      CHECK(e.witness().contains("unsplit_factor"));
    }
  }

  TEST_CASE("incompatible brackets are rejected by the pencil constructor")
  {
    // [e0, e1] = e2 and [e2, e3] = e0 are each Lie, their sum fails on (e0, e1, e3)
    StructureConstants s(4), other(4);
    s.set_bracket(0, 1, 2, 1);
    other.set_bracket(2, 3, 0, 1);
    REQUIRE(check_jacobi(s).empty());
    REQUIRE(check_jacobi(other).empty());
    CHECK_THROWS_AS(BracketPencil(s, other, {}, PencilOrigin::Manual), Error);
  }

  TEST_CASE("resolvent identity")
  {
    const auto g = oracle::gl(2);
    const auto la = left_mult(oracle::diag({1, 2}));
    CHECK(resolvent_identity_check(g, la, 3));
    const auto borel = build("borel_projector", {{"n", 2}});
    CHECK(resolvent_identity_check(borel.algebra, *borel.op, 0));
    try {
      resolvent_identity_check(g, la, 2);
      FAIL("expected a singular shift");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Singular);
    }
    // fails for an operator with torsion
    CHECK_FALSE(resolvent_identity_check(sl2(), h_to_e(), 1));
  }

  TEST_CASE("spectrum and eigenspaces")
  {
    const auto d = spectrum_and_eigenspaces(oracle::diag({1, 1, 2}));
    REQUIRE(d.size() == 2);
    CHECK(d[0].eigenvalue == 1);
    CHECK(d[0].basis.dim() == 2);
    CHECK(d[0].riesz_index == 1);
    CHECK(d[1].eigenvalue == 2);
    CHECK(d[1].basis.dim() == 1);
    CHECK(is_diagonalizable(d));

    OperatorMatrix jordan(2, 2);
    jordan(0, 1) = 1;
    const auto j = spectrum_and_eigenspaces(jordan);
    REQUIRE(j.size() == 1);
    CHECK(j[0].eigenvalue == 0);
    CHECK(j[0].basis.dim() == 2);
    CHECK(j[0].riesz_index == 2);
    CHECK_FALSE(is_diagonalizable(j));

    const auto la = spectrum_and_eigenspaces(left_mult(oracle::diag({1, 2})));
    REQUIRE(la.size() == 2);
    for (std::size_t row = 0; row < 2; ++row) {
      CHECK(la[row].basis.dim() == 2);
      CHECK(la[row].riesz_index == 1);
      for (std::size_t b = 0; b < 2; ++b)
        CHECK(la[row].basis.contains(unit_vector(4, row * 2 + b)));
    }
    CHECK(characteristic_polynomial(oracle::diag({1, 2})) == std::vector<Rational>{2, -3, 1});
  }

  TEST_CASE("operator from a decomposition")
  {
    const auto s = sl2();
    const SubspaceBasis nminus({unit_vector(3, F)}, 3);
    const SubspaceBasis bplus({unit_vector(3, E), unit_vector(3, H)}, 3);
    const auto n = operator_from_decomposition(s, {nminus, bplus}, {1, -1});
    CHECK(n == *build("borel_projector", {{"n", 2}}).op);
    CHECK(torsion(s, n).is_zero());

    auto code_of = [&](const std::vector<SubspaceBasis>& parts, const std::vector<Rational>& ev) {
      try {
        operator_from_decomposition(s, parts, ev);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::Internal;
    };
    CHECK(code_of({nminus, bplus}, {1, 1}) == ErrorCode::DuplicateEigenvalue);
    CHECK(code_of({SubspaceBasis({unit_vector(3, E)}, 3), SubspaceBasis({unit_vector(3, H)}, 3),
                   SubspaceBasis({unit_vector(3, F)}, 3)},
                  {1, 2, 3}) == ErrorCode::PairwiseSumNotSubalgebra);
    CHECK(code_of({nminus, nminus}, {1, 2}) == ErrorCode::NotDirectSum);
  }

  TEST_CASE("image subalgebras of left multiplication have a zero row")
  {
    const auto g = oracle::gl(3);
    const auto la = left_mult(oracle::diag({1, 2, 3}));
    for (long lam = 1; lam <= 3; ++lam) {
      const auto img = image_subalgebra(g, la, lam);
      CHECK(img.dim() == 6);
      for (std::size_t b = 0; b < 3; ++b)
        CHECK_FALSE(img.contains(unit_vector(9, static_cast<std::size_t>(lam - 1) * 3 + b)));
    }
  }

  TEST_CASE("property: shifts and linear fractional functions stay Nijenhuis")
  {
    oracle::Lcg rng{21};
    const auto g = oracle::gl(2);
    const auto la = left_mult(oracle::diag({1, 2}));
    const auto borel = build("borel_projector", {{"n", 3}});
    for (int t = 0; t < 10; ++t) {
      const Rational lam = rng.nonzero_rational(20);
      CHECK(torsion(g, shifted(la, lam)).is_zero());
      const Rational s1 = rng.nonzero_rational(9), s2 = rng.nonzero_rational(9);
      const Rational s3 = rng.nonzero_rational(9), s4 = rng.nonzero_rational(9);
      try {
        CHECK(torsion(g, linear_fractional(la, s1, s2, s3, s4)).is_zero());
        CHECK(torsion(borel.algebra, linear_fractional(*borel.op, s1, s2, s3, s4)).is_zero());
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Singular);
      }
    }
    CHECK_THROWS_AS(linear_fractional(la, 1, 0, 1, -1), Error);
  }
}
