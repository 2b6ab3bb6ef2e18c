#include <pforge/pforge.h>

#include "errors.hpp"
#include "reports.hpp"

#include <cstring>
#include <functional>
#include <string>

using namespace pforge;

struct pf_algebra {
  StructureConstants value;
};
struct pf_operator {
  OperatorMatrix value;
};
struct pf_pencil {
  BracketPencil value;
};
struct pf_family {
  IntegralFamily value;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_witness = "null";

void set_error(const std::string& what, const json& witness)
{
  last_error = what;
  last_witness = witness.dump();
}

pf_status guard(const std::function<void()>& body)
{
  try {
    last_error.clear();
    last_witness = "null";
    body();
    return PF_OK;
  } catch (const Error& e) {
    set_error(e.what(), e.witness());
    return static_cast<pf_status>(static_cast<int>(e.code()));
  } catch (const json::parse_error& e) {
    set_error(std::string("malformed JSON: ") + e.what(), {{"byte", e.byte}});
    return PF_ERR_PARSE;
  } catch (const json::exception& e) {
    set_error(std::string("unexpected JSON content: ") + e.what(), nullptr);
    return PF_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    set_error("out of memory", nullptr);
    return PF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what(), nullptr);
    return PF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what)
{
  if (!p)
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

json parse(const char* text)
{
  require(text, "JSON text");
  return json::parse(text);
}

json parse_params(const char* text)
{
  if (!text || !*text)
    return json::object();
  json j = json::parse(text);
  if (!j.is_object())
    throw Error(ErrorCode::Parse, "parameters must be a JSON object", {{"pointer", "/"}});
  return j;
}

PointSamplerConfig sampler_config(const pf_config* cfg)
{
  pf_config c = cfg ? *cfg : pf_config_default();
  PointSamplerConfig out;
  out.seed = c.seed;
  out.samples = c.samples;
  out.coord_bound = c.coord_bound;
  out.validate();
  return out;
}

void emit(const json& report, char** out, int* positive, bool verdict_positive)
{
  require(out, "report pointer");
  *out = dup_string(report.dump(2));
  if (positive)
    *positive = verdict_positive ? 1 : 0;
}

std::size_t param_size(const json& params, const char* key, std::size_t fallback)
{
  if (!params.contains(key))
    return fallback;
  if (!params[key].is_number_unsigned())
    throw Error(ErrorCode::Parse, std::string("parameter '") + key + "' must be a non-negative integer",
                {{"pointer", std::string("/") + key}});
  return params[key].get<std::size_t>();
}

// "A" as a list of diagonal entries; default diag(1..n).
Matrix diagonal_param(const json& params, std::size_t n)
{
  Matrix a(n, n);
  if (!params.contains("A")) {
    for (std::size_t i = 0; i < n; ++i)
      a(i, i) = Rational(static_cast<long>(i + 1));
    return a;
  }
  const Vector d = vector_from_json(params["A"], n, "/A");
  for (std::size_t i = 0; i < n; ++i)
    a(i, i) = d[i];
  return a;
}

}  // namespace

extern "C" {

pf_config pf_config_default(void)
{
  return pf_config{42, 64, 1000, 64};
}

const char* pf_status_name(pf_status status)
{
  if (status == PF_OK)
    return "Ok";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* pf_last_error(void)
{
  return last_error.c_str();
}

const char* pf_last_error_witness(void)
{
  return last_witness.c_str();
}

void pf_string_free(char* s)
{
  std::free(s);
}

pf_status pf_algebra_from_json(const char* text, pf_algebra** out)
{
  return guard([&] {
    require(out, "output");
    *out = new pf_algebra{algebra_from_json(parse(text))};
  });
}

pf_status pf_algebra_to_json(const pf_algebra* a, char** out)
{
  return guard([&] {
    require(a, "algebra");
    require(out, "output");
    *out = dup_string(algebra_to_json(a->value).dump(2));
  });
}

pf_status pf_algebra_dim(const pf_algebra* a, size_t* out)
{
  return guard([&] {
    require(a, "algebra");
    require(out, "output");
    *out = a->value.dim();
  });
}

void pf_algebra_free(pf_algebra* a)
{
  delete a;
}

pf_status pf_operator_from_json(const char* text, const pf_algebra* a, pf_operator** out)
{
  return guard([&] {
    require(a, "algebra");
    require(out, "output");
    *out = new pf_operator{operator_from_json(parse(text), a->value.dim())};
  });
}

pf_status pf_operator_to_json(const pf_operator* op, char** out)
{
  return guard([&] {
    require(op, "operator");
    require(out, "output");
    *out = dup_string(operator_to_json(op->value).dump(2));
  });
}

void pf_operator_free(pf_operator* op)
{
  delete op;
}

pf_status pf_pencil_from_json(const char* text, pf_pencil** out)
{
  return guard([&] {
    require(out, "output");
    *out = new pf_pencil{pencil_from_json(parse(text))};
  });
}

pf_status pf_pencil_from_operator(const pf_algebra* a, const pf_operator* op, pf_pencil** out)
{
  return guard([&] {
    require(a, "algebra");
    require(op, "operator");
    require(out, "output");
    *out = new pf_pencil{pencil_of(a->value, op->value)};
  });
}

pf_status pf_pencil_to_json(const pf_pencil* p, char** out)
{
  return guard([&] {
    require(p, "pencil");
    require(out, "output");
    *out = dup_string(pencil_to_json(p->value).dump(2));
  });
}

void pf_pencil_free(pf_pencil* p)
{
  delete p;
}

pf_status pf_family_from_json(const char* text, pf_family** out)
{
  return guard([&] {
    require(out, "output");
    *out = new pf_family{family_from_json(parse(text))};
  });
}

pf_status pf_family_to_json(const pf_family* f, char** out)
{
  return guard([&] {
    require(f, "family");
    require(out, "output");
    *out = dup_string(family_to_json(f->value).dump(2));
  });
}

void pf_family_free(pf_family* f)
{
  delete f;
}

pf_status pf_family_build(const char* kind, const char* params_json, const pf_algebra* a, const pf_operator* op,
                          const pf_family* casimirs, pf_family** out)
{
  return guard([&] {
    require(kind, "family kind");
    require(out, "output");
    const json params = parse_params(params_json);
    const std::string k = kind;
    if (k == "casimir") {
      require(a, "algebra");
      require(op, "operator");
      require(casimirs, "casimir family");
      std::vector<MultiPoly> polys;
      for (const auto& m : casimirs->value.members)
        polys.push_back(m.poly);
      const auto max_l = static_cast<unsigned>(param_size(params, "max_l", 2));
      *out = new pf_family{casimir_resolvent_family(a->value, op->value, polys, max_l)};
      return;
    }
    const std::size_t n = param_size(params, "n", 2);
    if (n == 0)
      throw Error(ErrorCode::InvalidArgument, "n must be positive");
    if (k == "manakov") {
      *out = new pf_family{manakov_family(n, diagonal_param(params, n))};
    } else if (k == "resolvent") {
      const auto max_l = static_cast<unsigned>(param_size(params, "max_l", n - 1));
      const bool beyond = params.value("beyond_degree", false);
      *out = new pf_family{resolvent_family(n, diagonal_param(params, n), max_l, beyond)};
    } else if (k == "borel") {
      *out = new pf_family{borel_family(n)};
    } else {
      throw Error(ErrorCode::UnknownName, "unknown family '" + k + "'");
    }
  });
}

pf_status pf_catalog_list(char** out_json)
{
  return guard([&] {
    require(out_json, "output");
    *out_json = dup_string(json(catalog_names()).dump());
  });
}

pf_status pf_catalog_build(const char* name, const char* params_json, pf_algebra** alg, pf_operator** op,
                           pf_pencil** pencil, char** entry_json)
{
  return guard([&] {
    require(name, "catalog name");
    CatalogEntry e = build(name, parse_params(params_json));
    if (entry_json)
      *entry_json = dup_string(catalog_entry_to_json(e).dump(2));
    if (alg)
      *alg = new pf_algebra{e.algebra};
    if (op)
      *op = e.op ? new pf_operator{*e.op} : nullptr;
    if (pencil)
      *pencil = e.pencil ? new pf_pencil{*e.pencil} : nullptr;
  });
}

pf_status pf_validate(const pf_algebra* a, const pf_operator* op, char** report, int* positive)
{
  return guard([&] {
    require(a, "algebra");
    const ViolationReport jac = check_jacobi(a->value);
    json out{{"dim", a->value.dim()}, {"jacobi", violation_report_to_json(jac)}};
    bool ok = jac.empty();
    std::string verdict = ok ? "VALID" : "INVALID";
    if (op) {
      if (op->value.rows() != a->value.dim() || op->value.cols() != a->value.dim())
        throw Error(ErrorCode::DimensionMismatch, "operator size does not match the algebra");
      if (jac.empty()) {
        const TorsionTensor t = torsion(a->value, op->value);
        out["torsion"] = torsion_to_json(t);
        if (!t.is_zero()) {
          ok = false;
          verdict = "TORSION_NONZERO";
        }
      }
    }
    out["verdict"] = verdict;
    emit(out, report, positive, ok);
  });
}

pf_status pf_pencil_report(const pf_pencil* p, char** report, int* positive)
{
  return guard([&] {
    require(p, "pencil");
    json out{{"verdict", "COMPATIBLE"},
             {"pencil", pencil_to_json(p->value)},
             {"degenerate", p->value.degenerate()},
             {"checked_members", {{1, 0}, {0, 1}, {1, 1}}}};
    emit(out, report, positive, true);
  });
}

pf_status pf_index(const pf_algebra* a, const pf_config* cfg, char** report, int* positive)
{
  return guard([&] {
    require(a, "algebra");
    require_lie(a->value);
    emit(index_to_json(certified_index(a->value, sampler_config(cfg))), report, positive, true);
  });
}

pf_status pf_kronecker(const pf_pencil* p, const pf_config* cfg, char** report, int* positive)
{
  return guard([&] {
    require(p, "pencil");
    const PencilRankProfile prof = kronecker_certify(p->value, sampler_config(cfg));
    emit(rank_profile_to_json(prof), report, positive, prof.verdict == KroneckerVerdict::CertifiedKronecker);
  });
}

pf_status pf_corollary(const pf_algebra* a, const pf_operator* op, const pf_config* cfg, char** report,
                       int* positive)
{
  return guard([&] {
    require(a, "algebra");
    require(op, "operator");
    require_lie(a->value);
    const CoisotropyReport r = corollary_condition(a->value, op->value, sampler_config(cfg));
    emit(coisotropy_report_to_json(r, false), report, positive, r.corollary_holds);
  });
}

pf_status pf_criterion(const pf_algebra* a, const pf_operator* op, const pf_config* cfg, char** report,
                       int* positive)
{
  return guard([&] {
    require(a, "algebra");
    require(op, "operator");
    require_lie(a->value);
    const pf_config c = cfg ? *cfg : pf_config_default();
    const PointSamplerConfig sc = sampler_config(&c);
    const CoisotropyReport r = theorem_criterion(a->value, op->value, sc, c.search_budget);
    json out = coisotropy_report_to_json(r, true);
    // a certified pencil must admit covectors, so a miss only means the budget ran out
    if (r.verdict != CriterionVerdict::FoundAll)
      out["needs_larger_budget"] =
          kronecker_certify(pencil_of(a->value, op->value), sc).verdict == KroneckerVerdict::CertifiedKronecker;
    emit(out, report, positive, r.verdict == CriterionVerdict::FoundAll);
  });
}

pf_status pf_involution(const pf_family* f, const pf_pencil* p, char** report, int* positive)
{
  return guard([&] {
    require(f, "family");
    require(p, "pencil");
    const InvolutivityReport r = involutivity_check(f->value, p->value);
    emit(involutivity_to_json(r, f->value), report, positive, r.involutive);
  });
}

pf_status pf_lenard(const char* params_json, char** report, int* positive)
{
  return guard([&] {
    const json params = parse_params(params_json);
    const std::size_t n = param_size(params, "n", 2);
    if (n == 0)
      throw Error(ErrorCode::InvalidArgument, "n must be positive");
    const Matrix a = diagonal_param(params, n);
    const CatalogEntry e = build("left_mult", {{"n", n}, {"A", matrix_to_json(a)}});
    const LenardReport r = lenard_check(n, a, *e.pencil);
    emit(lenard_to_json(r), report, positive, r.holds);
  });
}

pf_status pf_completeness(const pf_family* f, const pf_pencil* p, const pf_config* cfg, char** report,
                          int* positive)
{
  return guard([&] {
    require(f, "family");
    require(p, "pencil");
    const CompletenessReport r = completeness_rank(f->value, p->value, sampler_config(cfg));
    emit(completeness_to_json(r), report, positive, r.complete);
  });
}

pf_status pf_equivalence(const pf_family* f1, const pf_family* f2, const pf_config* cfg, char** report,
                         int* positive)
{
  return guard([&] {
    require(f1, "first family");
    require(f2, "second family");
    const SpanEquivalenceReport r = family_span_equivalence(f1->value, f2->value, sampler_config(cfg));
    emit(span_equivalence_to_json(r), report, positive, r.equivalent);
  });
}

pf_status pf_rais(const pf_algebra* h, const char* representation_json, const pf_config* cfg, char** report,
                  int* positive)
{
  return guard([&] {
    require(h, "algebra");
    require_lie(h->value);
    auto [action, dim_v] = representation_from_json(parse(representation_json), h->value.dim());
    const RaisReport r = rais_check(h->value, action, dim_v, sampler_config(cfg));
    emit(rais_to_json(r), report, positive, r.holds);
  });
}

}  // extern "C"
