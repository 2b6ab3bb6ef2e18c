#include "catalog.hpp"
#include "errors.hpp"
#include "lie_core.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace pforge;

namespace {

// sl_2 catalog basis is (e, h, f).
const std::size_t E = 0, H = 1, F = 2;

StructureConstants sl2()
{
  return build("sl", {{"n", 2}}).algebra;
}

SubspaceBasis zero_row_subalgebra(std::size_t n, std::size_t row)
{
  std::vector<Vector> vs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != row)
        vs.push_back(unit_vector(n * n, a * n + b));
  return SubspaceBasis(vs, n * n);
}

PointSamplerConfig cfg(std::uint32_t samples = 16, std::uint64_t bound = 100)
{
  PointSamplerConfig c;
  c.samples = samples;
  c.coord_bound = bound;
  return c;
}

}  // namespace

TEST_SUITE("lie-core")
{
  TEST_CASE("check_jacobi accepts gl_2 and abelian algebras")
  {
    CHECK(check_jacobi(oracle::gl(2)).empty());
    CHECK(check_jacobi(StructureConstants(4)).empty());
    CHECK(check_jacobi(StructureConstants(0)).empty());
  }

  TEST_CASE("check_jacobi reports an antisymmetry violation with its index")
  {
    StructureConstants c(2);
    c.at(0, 1, 0) = 1;
    const auto rep = check_jacobi(c);
    REQUIRE_FALSE(rep.empty());
    CHECK(rep.violations.front().kind == "antisymmetry");
    CHECK(rep.violations.front().indices == std::vector<std::size_t>{0, 1, 0});
    CHECK_THROWS_AS(require_lie(c), Error);
  }

  TEST_CASE("check_jacobi reports a Jacobi violation")
  {
    // [e0,e1] = e2, [e1,e2] = e1, [e0,e2] = 0 is antisymmetric but not Lie.
    StructureConstants c(3);
    c.set_bracket(0, 1, 2, 1);
    c.set_bracket(1, 2, 1, 1);
    const auto rep = check_jacobi(c);
    REQUIRE_FALSE(rep.empty());
    CHECK(rep.violations.front().kind == "jacobi");
  }

  TEST_CASE("bracket_apply")
  {
    const auto c = sl2();
    CHECK(bracket_apply(c, unit_vector(3, H), unit_vector(3, E)) == scale(2, unit_vector(3, E)));
    CHECK(bracket_apply(c, unit_vector(3, E), unit_vector(3, F)) == unit_vector(3, H));
    oracle::Lcg rng{3};
    const Vector x = rng.vec(3, 9);
    CHECK(is_zero(bracket_apply(c, x, x)));
    CHECK(is_zero(bracket_apply(StructureConstants(3), x, rng.vec(3, 9))));
    CHECK_THROWS_AS(bracket_apply(c, x, Vector(2)), Error);
  }

  TEST_CASE("lie_poisson_matrix")
  {
    const auto c = sl2();
    CHECK(lie_poisson_matrix(c, zeros(3)).is_zero());
    CHECK(rank(lie_poisson_matrix(c, unit_vector(3, H))) == 2);
    CHECK(lie_poisson_matrix(StructureConstants(3), Vector{1, 2, 3}).is_zero());
    CHECK_THROWS_AS(lie_poisson_matrix(c, Vector(2)), Error);
  }

  TEST_CASE("algebra_index of abelian algebras equals the dimension")
  {
    for (std::size_t n : {0u, 1u, 3u, 5u})
      CHECK(algebra_index(StructureConstants(n), cfg()).index == n);
  }

  TEST_CASE("gl_2 has index 2 (Pfaffian oracle)")
  {
    const auto c = oracle::gl(2);
    oracle::Lcg rng{17};
    for (int t = 0; t < 50; ++t) {
      const Matrix p = oracle::poisson(c, rng.vec(4, 1000));
      const Rational pf = p(0, 1) * p(2, 3) - p(0, 2) * p(1, 3) + p(0, 3) * p(1, 2);
      CHECK(sgn(pf) == 0);
    }
    const auto res = certified_index(c, cfg());
    CHECK(res.index == 2);
    CHECK(oracle::bareiss_rank(oracle::poisson(c, res.witness)) == 2);
  }

  TEST_CASE("zero-row subalgebras of gl_n are Frobenius")
  {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto g = oracle::gl(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto sub = subalgebra_restrict(g, zero_row_subalgebra(n, i));
        const auto res = algebra_index(sub, cfg());
        CHECK(res.index == 0);
        CHECK(oracle::bareiss_rank(oracle::poisson(sub, res.witness)) == sub.dim());
      }
    }
  }

  TEST_CASE("subalgebra_restrict")
  {
    const auto g = oracle::gl(2);
    CHECK(subalgebra_restrict(g, SubspaceBasis::full(4)) == g);
    // {E11, E12}: [E11, E12] = E12
    const auto r = subalgebra_restrict(g, SubspaceBasis({unit_vector(4, 0), unit_vector(4, 1)}, 4));
    CHECK(r.dim() == 2);
    CHECK(r(0, 1, 1) == 1);
    CHECK(r(0, 1, 0) == 0);
    try {
      subalgebra_restrict(sl2(), SubspaceBasis({unit_vector(3, E), unit_vector(3, F)}, 3));
      FAIL("expected NotASubalgebra");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotASubalgebra);
      CHECK(e.witness().contains("pair"));
    }
    CHECK_THROWS_AS(SubspaceBasis({unit_vector(3, 0), unit_vector(3, 0)}, 3), Error);
  }

  TEST_CASE("coisotropy numbers at a = 0 recover index and codimension")
  {
    const auto g = oracle::gl(3);
    const auto b = zero_row_subalgebra(3, 1);
    const auto res = coisotropy_numbers(g, b, zeros(3), cfg());
    CHECK(res.codim_a == 3);
    CHECK(res.ind_a == algebra_index(subalgebra_restrict(g, b), cfg()).index);
    CHECK(res.stabilizer.dim() == b.dim());
    const auto s = sl2();
    const SubspaceBasis borel({unit_vector(3, E), unit_vector(3, H)}, 3);
    const auto r0 = coisotropy_numbers(s, borel, zeros(1), cfg());
    CHECK(r0.ind_a == 0);
    CHECK(r0.codim_a == 1);
  }

  TEST_CASE("coisotropy numbers at the principal nilpotent and regular semisimple directions")
  {
    const auto s = sl2();
    const SubspaceBasis borel({unit_vector(3, E), unit_vector(3, H)}, 3);
    const auto r1 = coisotropy_numbers(s, borel, Vector{1}, cfg());
    CHECK(r1.ind_a == 1);
    CHECK(r1.codim_a == 0);
    const SubspaceBasis nminus({unit_vector(3, F)}, 3);
    REQUIRE(complement_indices(nminus) == std::vector<std::size_t>{E, H});
    const auto r2 = coisotropy_numbers(s, nminus, Vector{0, 1}, cfg());
    CHECK(r2.ind_a == 0);
    CHECK(r2.codim_a == 1);
    CHECK_THROWS_AS(coisotropy_numbers(s, nminus, Vector{1}, cfg()), Error);
  }

  TEST_CASE("semidirect products")
  {
    // trivial action: direct sum
    const auto h = sl2();
    Representation trivial(3, Matrix(2, 2));
    const auto ds = semidirect_product(h, trivial, 2);
    CHECK(check_jacobi(ds).empty());
    CHECK(algebra_index(ds, cfg()).index == 1 + 2);
    // aff(1): [e, v] = v
    const auto aff = semidirect_product(StructureConstants(1), {Matrix::identity(1)}, 1);
    CHECK(aff(0, 1, 1) == 1);
    CHECK(aff(0, 1, 0) == 0);
    CHECK(algebra_index(aff, cfg()).index == 0);
    // a non-representation of sl_2
    Representation bad{Matrix::identity(1), Matrix::identity(1), Matrix::identity(1)};
    CHECK_THROWS_AS(semidirect_product(h, bad, 1), Error);
  }

  TEST_CASE("twilled truncation: an ideal with zero bracket leaves the algebra unchanged")
  {
    const auto e = build("affine", {{"n", 2}});
    std::vector<Vector> b1, b2;
    for (std::size_t i = 0; i < 4; ++i)
      b1.push_back(unit_vector(6, i));
    for (std::size_t i = 4; i < 6; ++i)
      b2.push_back(unit_vector(6, i));
    const auto t = twilled_truncate(e.algebra, SubspaceBasis(b1, 6), SubspaceBasis(b2, 6));
    CHECK(t.truncated == e.algebra);
  }

  TEST_CASE("twilled truncation of sl_2 along b+ and n-")
  {
    const auto s = sl2();
    const auto t = twilled_truncate(s, SubspaceBasis({unit_vector(3, E), unit_vector(3, H)}, 3),
                                    SubspaceBasis({unit_vector(3, F)}, 3));
    const auto& c = t.truncated;
    CHECK(check_jacobi(c).empty());
    CHECK_FALSE(c.is_zero());
    // basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = 0
    CHECK(c(1, 0, 0) == 2);
    CHECK(c(1, 2, 2) == -2);
    CHECK(is_zero(c.bracket_basis(0, 2)));
    CHECK(algebra_index(c, cfg()).index == 1);
    CHECK(semidirect_product(t.g1, t.a1, 1) == c);
    CHECK_THROWS_AS(twilled_truncate(s, SubspaceBasis({unit_vector(3, E)}, 3),
                                     SubspaceBasis({unit_vector(3, F)}, 3)),
                    Error);
  }

  TEST_CASE("twilled truncation of gl_2 matches the deformed bracket through L")
  {
    const auto e = build("left_mult", {{"n", 2}, {"A", {1, 2}}});
    for (long lam : {1L, 2L}) {
      const Matrix m = *e.op - Rational(lam) * Matrix::identity(4);
      std::vector<Vector> img, ker;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t b = 0; b < 2; ++b)
          (r + 1 == static_cast<std::size_t>(lam) ? ker : img).push_back(unit_vector(4, r * 2 + b));
      const auto t = twilled_truncate(e.algebra, SubspaceBasis(img, 4), SubspaceBasis(ker, 4));
      CHECK(check_jacobi(t.truncated).empty());
      // deformed bracket of M = L_A - lambda, expressed in the basis (img, ker)
      StructureConstants deformed = StructureConstants::combine(1, e.pencil->c2(), -Rational(lam), e.algebra);
      const auto moved = change_basis(deformed, t.basis);
      Matrix l = Matrix::identity(4);
      const Matrix m_local = inverse(t.basis) * m * t.basis;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t col = 0; col < 2; ++col)
          l(r, col) = m_local(r, col);
      CHECK(is_homomorphism(l, moved, t.truncated));
      if (!(l == Matrix::identity(4)))
        CHECK_FALSE(is_homomorphism(Matrix::identity(4), moved, t.truncated));
    }
  }

  TEST_CASE("Rais formula on small semidirect products")
  {
    const auto c = cfg(32, 100);
    CHECK(rais_check(sl2(), Representation(3, Matrix(2, 2)), 2, c).holds);
    const auto aff = rais_check(StructureConstants(1), {Matrix::identity(1)}, 1, c);
    CHECK(aff.holds);
    CHECK(aff.lhs_index == 0);
    CHECK(aff.orbit_codim == 0);
    CHECK(aff.stabilizer_index == 0);
    // zero-first-row subalgebra of gl_2: span(E22) acting on span(E21)
    const auto g = oracle::gl(2);
    const auto sub = subalgebra_restrict(g, SubspaceBasis({unit_vector(4, 3)}, 4));
    const Matrix act = Matrix::from_rows({{g(3, 2, 2)}}, 1);
    const auto r = rais_check(sub, {act}, 1, c);
    CHECK(r.holds);
    CHECK(r.lhs_index == 0);
  }

  TEST_CASE("property: antisymmetry of random brackets")
  {
    const auto c = oracle::gl(3);
    oracle::Lcg rng{99};
    for (int t = 0; t < 100; ++t) {
      const Vector x = rng.vec(9, 20), y = rng.vec(9, 20);
      CHECK(bracket_apply(c, x, y) == scale(-1, bracket_apply(c, y, x)));
    }
  }

  TEST_CASE("property: Lie-Poisson ranks are even")
  {
    oracle::Lcg rng{7};
    for (const auto& c : {oracle::gl(3), sl2(), build("so", {{"n", 4}}).algebra, build("affine", {{"n", 2}}).algebra})
      for (int t = 0; t < 20; ++t)
        CHECK(rank(lie_poisson_matrix(c, rng.vec(c.dim(), 5))) % 2 == 0);
  }

  TEST_CASE("property: index is invariant under change of basis")
  {
    oracle::Lcg rng{1234};
    for (const auto& c : {sl2(), oracle::gl(2)}) {
      const std::size_t base = certified_index(c, cfg()).index;
      for (int t = 0; t < 10; ++t) {
        Matrix p(c.dim(), c.dim());
        do {
          for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j)
              p(i, j) = oracle::frac(rng.next(3), 1 + std::abs(rng.next(2)));
        } while (rank(p) < c.dim());
        const auto moved = change_basis(c, p);
        CHECK(check_jacobi(moved).empty());
        CHECK(is_homomorphism(p, moved, c));
        CHECK(certified_index(moved, cfg()).index == base);
      }
    }
  }

  TEST_CASE("property: semidirect products of valid representations satisfy Jacobi")
  {
    // gl_2 acting on K^2 and on K^2 (+) K^2
    const auto units = gl_basis(2);
    const auto h = oracle::gl(2);
    CHECK(check_jacobi(semidirect_product(h, units, 2)).empty());
    Representation doubled;
    for (const auto& u : units) {
      Matrix d(4, 4);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          d(r, c) = d(r + 2, c + 2) = u(r, c);
      doubled.push_back(d);
    }
    CHECK(check_jacobi(semidirect_product(h, doubled, 4)).empty());
  }

  TEST_CASE("dimension-one algebras")
  {
    CHECK(algebra_index(StructureConstants(1), cfg()).index == 1);
    CHECK(check_jacobi(StructureConstants(1)).empty());
  }
}
