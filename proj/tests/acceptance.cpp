// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "catalog.hpp"
#include "errors.hpp"
#include "integrals.hpp"
#include "oracles.hpp"
#include "pencil_analysis.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace pforge;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what)
  {
    if (!ok) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Matrix diag_range(std::size_t n)
{
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    a(i, i) = Rational(static_cast<long>(i + 1));
  return a;
}

std::vector<std::string> gl_labels(std::size_t n)
{
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n * n; ++i)
    out.push_back("x" + std::to_string(i));
  return out;
}

PointSamplerConfig defaults()
{
  return PointSamplerConfig{};
}

bool witnesses_reverified(const BracketPencil& p, const PencilRankProfile& prof)
{
  bool ok = oracle::bareiss_rank(oracle::poisson(p.member(-prof.generic_lambda, 1), prof.generic_witness)) ==
            prof.generic_rank;
  auto member_ok = [&](const MemberRank& m) {
    if (m.zero_member)
      return true;
    return m.witness && oracle::bareiss_rank(oracle::poisson(p.member(m.s1, m.s2), *m.witness)) == prof.generic_rank;
  };
  for (const auto& m : prof.per_exceptional)
    ok = ok && member_ok(m);
  return ok && member_ok(prof.infinity_member);
}

Outcome torsion_and_deformation()
{
  Outcome out;
  const auto t0 = Clock::now();
  for (std::size_t n = 2; n <= 5; ++n) {
    const Matrix a = diag_range(n);
    const auto g = matrix_algebra(gl_basis(n), gl_labels(n));
    const auto la = left_multiplication(a);
    out.require(torsion(g, la).is_zero(), "torsion of L_A on gl_" + std::to_string(n));
    const auto deformed = deformed_bracket(g, la);
    bool entrywise = true;
    for (std::size_t i = 0; i < n * n && entrywise; ++i)
      for (std::size_t j = 0; j < n * n && entrywise; ++j) {
        const Matrix x = oracle::as_square(unit_vector(n * n, i), n);
        const Matrix y = oracle::as_square(unit_vector(n * n, j), n);
        entrywise = deformed.bracket_basis(i, j) == oracle::flatten(x * a * y - y * a * x);
      }
    out.require(entrywise, "deformed bracket on gl_" + std::to_string(n));
  }
  const double secs = seconds_since(t0);
  out.require(secs < 5.0, "runtime under 5 s");
  out.detail << "gl_2..gl_5 exact, " << secs << " s";
  return out;
}

struct NamedPair {
  std::string name;
  CatalogEntry entry;
};

std::vector<NamedPair> operator_pairs()
{
  std::vector<NamedPair> out;
  auto add = [&](const std::string& name, const nlohmann::json& params) {
    out.push_back({name + params.dump(), build(name, params)});
  };
  for (std::size_t n = 2; n <= 4; ++n)
    add("left_mult", {{"n", n}});
  add("left_mult", {{"n", 3}, {"A", {1, 1, 2}}});
  for (std::size_t n = 2; n <= 4; ++n)
    add("borel_projector", {{"n", n}});
  add("sl2_projector", nlohmann::json::object());
  return out;
}

Outcome resolvent_identity(const std::vector<NamedPair>& pairs)
{
  Outcome out;
  oracle::Lcg rng{2024};
  std::size_t checks = 0;
  for (const auto& p : pairs) {
    const auto spectrum = rational_spectrum(*p.entry.op);
    for (int t = 0; t < 10; ++t) {
      Rational lam = rng.nonzero_rational(50);
      while (std::find(spectrum.begin(), spectrum.end(), lam) != spectrum.end())
        lam = rng.nonzero_rational(50);
      out.require(resolvent_identity_check(p.entry.algebra, *p.entry.op, lam), p.name + " at " + to_string(lam));
      ++checks;
    }
  }
  out.detail << checks << " exact checks over " << pairs.size() << " catalog pairs";
  return out;
}

Outcome frobenius_lemma()
{
  Outcome out;
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = matrix_algebra(gl_basis(n), gl_labels(n));
    for (std::size_t row = 0; row < n; ++row) {
      std::vector<Vector> vs;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (a != row)
            vs.push_back(unit_vector(n * n, a * n + b));
      const auto sub = subalgebra_restrict(g, SubspaceBasis(vs, n * n));
      const auto idx = algebra_index(sub, defaults());
      out.require(idx.index == 0, "gl_" + std::to_string(n) + " row " + std::to_string(row));
      ++count;
    }
  }
  out.detail << count << " subalgebras, all index 0";
  return out;
}

Outcome kronecker_family(const std::string& name)
{
  Outcome out;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto e = build(name, {{"n", n}});
    const auto prof = kronecker_certify(*e.pencil, defaults());
    const std::string tag = name + " n=" + std::to_string(n);
    out.require(prof.verdict == KroneckerVerdict::CertifiedKronecker, tag + " certified");
    out.require(prof.generic_rank == n * n - n, tag + " d = n^2 - n");
    out.require(witnesses_reverified(*e.pencil, prof), tag + " witnesses");
    out.detail << tag << ": d=" << prof.generic_rank << "; ";
  }
  return out;
}

Outcome criterion_consistency(const std::vector<NamedPair>& pairs)
{
  Outcome out;
  const auto cfg = defaults();
  for (const auto& p : pairs) {
    const auto prof = kronecker_certify(*p.entry.pencil, cfg);
    const auto crit = theorem_criterion(p.entry.algebra, *p.entry.op, cfg, 64);
    const bool certified = prof.verdict == KroneckerVerdict::CertifiedKronecker;
    const bool found = crit.verdict == CriterionVerdict::FoundAll;
    out.require(certified == found, p.name + " criterion/certification agree");
    out.detail << p.name << ": " << verdict_name(prof.verdict) << "/" << verdict_name(crit.verdict) << "; ";
    if (p.entry.name == "left_mult" && p.entry.parameters.size() == 1)
      out.require(corollary_condition(p.entry.algebra, *p.entry.op, cfg).corollary_holds,
                  p.name + " corollary holds");
    if (p.entry.name == "sl2_projector") {
      out.require(!crit.corollary_holds, "sl2 projector corollary fails");
      out.require(found, "sl2 projector criterion certifies");
      for (const auto& ev : crit.eigenvalues)
        out.require(ev.covector && ev.ind_c + ev.codim_c == crit.algebra_index, "sl2 projector numbers");
      // principal nilpotent and regular semisimple directions
      const SubspaceBasis bplus({unit_vector(3, 0), unit_vector(3, 1)}, 3);
      const SubspaceBasis nminus({unit_vector(3, 2)}, 3);
      const auto c1 = coisotropy_numbers(p.entry.algebra, bplus, Vector{1}, cfg);
      const auto c2 = coisotropy_numbers(p.entry.algebra, nminus, Vector{0, 1}, cfg);
      out.require(c1.ind_a == 1 && c1.codim_a == 0, "ind c_1 = 1 on b+");
      out.require(c2.ind_a == 0 && c2.codim_a == 1, "codim c_2 = 1 on n-");
    }
  }
  return out;
}

Outcome lenard_relations()
{
  Outcome out;
  const auto t0 = Clock::now();
  std::size_t relations = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto e = build("left_mult", {{"n", n}});
    const auto rep = lenard_check(n, diag_range(n), *e.pencil);
    out.require(rep.holds, "gl_" + std::to_string(n));
    const std::size_t expected = n * (n - 1);  // n(n-1)/2 of each kind
    out.require(rep.relations.size() == expected, "all admissible (k,l) on gl_" + std::to_string(n));
    relations += rep.relations.size();
  }
  const double secs = seconds_since(t0);
  out.require(secs < 30.0, "runtime under 30 s");
  out.detail << relations << " exact relations, " << secs << " s";
  return out;
}

Outcome involutivity_and_completeness()
{
  Outcome out;
  const auto cfg = defaults();
  const auto gl3 = build("left_mult", {{"n", 3}});
  const auto man = manakov_family(3, diag_range(3));
  out.require(man.members.size() == 6, "6 Manakov members");
  const auto inv = involutivity_check(man, *gl3.pencil);
  out.require(inv.involutive && inv.pairs.size() == 15, "Manakov involutivity under both brackets");
  const auto comp = completeness_rank(man, *gl3.pencil, cfg);
  out.require(comp.max_rank == 6 && comp.target == 6 && comp.complete, "gl_3 completeness 6 = (9+3)/2");
  const auto sl3 = build("borel_projector", {{"n", 3}});
  const auto bor = borel_family(3);
  const auto bcomp = completeness_rank(bor, *sl3.pencil, cfg);
  out.require(bcomp.max_rank == 5 && bcomp.target == 5, "sl_3 completeness 5 = (8+2)/2");
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto x = sl_matrix_entries(n);
    MultiPoly diag_sq(n * n - 1), cross(n * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      diag_sq += x[i * n + i] * x[i * n + i];
      for (std::size_t j = i + 1; j < n; ++j)
        cross += x[i * n + j] * x[j * n + i];
    }
    const auto fam = borel_family(n);
    out.require(family_contains(fam, diag_sq) && family_contains(fam, cross),
                "quadratics in the sl_" + std::to_string(n) + " Borel family");
  }
  out.detail << "gl_3 rank " << comp.max_rank << "/" << comp.target << ", sl_3 rank " << bcomp.max_rank << "/"
             << bcomp.target;
  return out;
}

Outcome family_equivalence()
{
  Outcome out;
  PointSamplerConfig cfg;
  cfg.samples = 16;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto rep = family_span_equivalence(manakov_family(n, diag_range(n)),
                                             resolvent_family(n, diag_range(n), static_cast<unsigned>(n - 1)), cfg);
    out.require(rep.equivalent && rep.samples.size() == 16, "gl_" + std::to_string(n));
  }
  out.detail << "gl_2, gl_3 at 16 points";
  return out;
}

Outcome rais_and_truncation()
{
  Outcome out;
  PointSamplerConfig cfg;
  cfg.samples = 32;
  cfg.coord_bound = 100;
  std::size_t products = 0;
  auto rais = [&](const std::string& name, const StructureConstants& h, const Representation& rep, std::size_t dv) {
    const auto r = rais_check(h, rep, dv, cfg);
    out.require(r.holds, "Rais on " + name);
    out.detail << name << ": " << r.lhs_index << "=" << r.orbit_codim << "+" << r.stabilizer_index << "; ";
    ++products;
  };
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto e = build("left_mult", {{"n", n}});
    for (std::size_t row = 0; row < n; ++row) {
      const Rational lam(static_cast<long>(row + 1));
      std::vector<Vector> img, ker;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          (a == row ? ker : img).push_back(unit_vector(n * n, a * n + b));
      const SubspaceBasis b1(img, n * n), b2(ker, n * n);
      const auto t = twilled_truncate(e.algebra, b1, b2);
      const std::string tag = "gl_" + std::to_string(n) + " lambda=" + to_string(lam);
      // L = (N - lambda) on the image, identity on the kernel, in the basis (B1, B2)
      const Matrix m = shifted(*e.op, lam);
      const auto moved = change_basis(deformed_bracket(e.algebra, m), t.basis);
      const Matrix local = inverse(t.basis) * m * t.basis;
      Matrix l = Matrix::identity(n * n);
      for (std::size_t r = 0; r < b1.dim(); ++r)
        for (std::size_t c = 0; c < b1.dim(); ++c)
          l(r, c) = local(r, c);
      out.require(is_homomorphism(l, moved, t.truncated), "truncation matches deformed bracket via L on " + tag);
      if (row == 0)
        rais(tag + " truncation", t.g1, t.a1, b2.dim());
    }
  }
  rais("aff(1)", StructureConstants(1), {Matrix::identity(1)}, 1);
  rais("gl_2 on K^2", matrix_algebra(gl_basis(2), gl_labels(2)), gl_basis(2), 2);
  rais("sl_2 trivial on K^2", build("sl", {{"n", 2}}).algebra, Representation(3, Matrix(2, 2)), 2);
  out.require(products >= 5, "at least 5 semidirect products");
  return out;
}

std::string run_capture(const std::string& cmd)
{
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int rc = pclose(pipe);
  return out + "\n<exit " + std::to_string(rc) + ">";
}

Outcome determinism()
{
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("pforge_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = std::string("cd '") + dir.string() + "' && '" + PFORGE_CLI_PATH + "' ";
  run_capture(cli + "catalog emit left_mult n=3 -o gl3.json -N la3.json");
  run_capture(cli + "catalog emit sl2_projector -o sl2.json -N proj.json");
  run_capture(cli + "catalog emit borel_projector n=3 --pencil-out borel3.json");
  run_capture(cli + "integrals manakov -n 3 -o man3.json");
  run_capture(cli + "integrals resolvent -n 3 -o res3.json");
  const std::vector<std::string> commands = {
      "catalog emit outer_pencil n=3",
      "validate -i gl3.json -N la3.json",
      "pencil -i gl3.json -N la3.json",
      "rank-profile --pencil borel3.json --seed 7",
      "kronecker -i gl3.json -N la3.json --seed 11",
      "index -i sl2.json",
      "corollary -i sl2.json -N proj.json",
      "criterion -i sl2.json -N proj.json --seed 3",
      "integrals borel -n 3",
      "involution --family man3.json -i gl3.json -N la3.json",
      "lenard -n 3",
      "completeness --family man3.json -i gl3.json -N la3.json --samples 8",
      "equivalence --family man3.json --family2 res3.json --samples 8",
      "kronecker --pencil borel3.json --format text",
  };
  for (const auto& c : commands) {
    const std::string first = run_capture(cli + c + " 2>&1");
    const std::string second = run_capture(cli + c + " 2>&1");
    out.require(first == second && first.size() > 20, "byte-identical output of '" + c + "'");
  }
  // the report file written with -o is identical as well
  run_capture(cli + "kronecker -i gl3.json -N la3.json -o r1.json");
  run_capture(cli + "kronecker -i gl3.json -N la3.json -o r2.json");
  auto slurp = [&](const char* name) {
    std::ifstream in(dir / name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  out.require(!slurp("r1.json").empty() && slurp("r1.json") == slurp("r2.json"), "byte-identical report files");
  fs::remove_all(dir);
  out.detail << commands.size() + 1 << " commands run twice";
  return out;
}

}  // namespace

int main()
{
  int failures = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass)
      ++failures;
    std::cout << "criterion " << id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << title << " -- " << o.detail.str()
              << std::endl;
  };
  std::vector<NamedPair> pairs;
  report(1, "torsion of L_A and deformed bracket xAy - yAx", torsion_and_deformation);
  report(2, "resolvent identity at random shifts", [&] {
    pairs = operator_pairs();
    return resolvent_identity(pairs);
  });
  report(3, "zero-row subalgebras of gl_n are Frobenius", frobenius_lemma);
  report(4, "Manakov pencil certified Kronecker", [] { return kronecker_family("left_mult"); });
  report(5, "Borel pencil certified Kronecker", [] { return kronecker_family("borel_projector"); });
  report(6, "criterion agrees with certification", [&] {
    if (pairs.empty())
      pairs = operator_pairs();
    return criterion_consistency(pairs);
  });
  report(7, "Lenard relations on gl_2 and gl_3", lenard_relations);
  report(8, "involutivity and completeness", involutivity_and_completeness);
  report(9, "Manakov and resolvent families span-equivalent", family_equivalence);
  report(10, "Rais formula and twilled truncation", rais_and_truncation);
  report(11, "CLI determinism", determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
