#include <pforge/pforge.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int exit_positive = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

struct Failure {
  int code;
};

struct Options {
  std::string input, op, pencil, family, family2, casimirs, rep, output, format = "json";
  std::uint64_t seed = 42;
  std::uint32_t samples = 64;
  std::uint64_t coord_bound = 1000;
  std::uint32_t budget = 64;
  std::size_t n = 0;
  std::string diag;
  unsigned max_l = 0;
  bool max_l_set = false;
  bool beyond = false;
  std::string kind;
  std::string catalog_action, catalog_name, op_out, pencil_out;
  std::vector<std::string> params;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Algebra = std::unique_ptr<pf_algebra, Deleter<pf_algebra, pf_algebra_free>>;
using Operator = std::unique_ptr<pf_operator, Deleter<pf_operator, pf_operator_free>>;
using Pencil = std::unique_ptr<pf_pencil, Deleter<pf_pencil, pf_pencil_free>>;
using Family = std::unique_ptr<pf_family, Deleter<pf_family, pf_family_free>>;

void check(pf_status s, const std::string& context)
{
  if (s == PF_OK)
    return;
  std::cerr << "error: " << context << ": " << pf_status_name(s) << ": " << pf_last_error() << "\n";
  const std::string witness = pf_last_error_witness();
  if (witness != "null")
    std::cerr << "witness: " << witness << "\n";
  throw Failure{s == PF_ERR_INTERNAL ? exit_internal : exit_input};
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    throw Failure{exit_input};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{exit_input};
  }
}

void require_flag(const std::string& value, const char* flag)
{
  if (value.empty()) {
    std::cerr << "error: missing required option " << flag << "\n";
    throw Failure{exit_input};
  }
}

Algebra load_algebra(const std::string& path)
{
  require_flag(path, "-i");
  pf_algebra* a = nullptr;
  check(pf_algebra_from_json(read_file(path).c_str(), &a), path);
  return Algebra(a);
}

Operator load_operator(const std::string& path, const pf_algebra* a)
{
  require_flag(path, "-N");
  pf_operator* op = nullptr;
  check(pf_operator_from_json(read_file(path).c_str(), a, &op), path);
  return Operator(op);
}

Family load_family(const std::string& path, const char* flag)
{
  require_flag(path, flag);
  pf_family* f = nullptr;
  check(pf_family_from_json(read_file(path).c_str(), &f), path);
  return Family(f);
}

// --pencil file, or -i with -N.
Pencil load_pencil(const Options& o)
{
  pf_pencil* p = nullptr;
  if (!o.pencil.empty()) {
    check(pf_pencil_from_json(read_file(o.pencil).c_str(), &p), o.pencil);
  } else {
    Algebra a = load_algebra(o.input);
    Operator op = load_operator(o.op, a.get());
    check(pf_pencil_from_operator(a.get(), op.get(), &p), "pencil");
  }
  return Pencil(p);
}

pf_config config(const Options& o)
{
  return pf_config{o.seed, o.samples, o.coord_bound, o.budget};
}

void render_text(const json& j, const std::string& prefix, std::ostream& out)
{
  if (j.is_object()) {
    if (prefix.empty() && j.contains("verdict"))
      out << "verdict: " << j["verdict"].get<std::string>() << "\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (prefix.empty() && it.key() == "verdict")
        continue;
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string take(char* s)
{
  std::string out = s ? s : "";
  pf_string_free(s);
  return out;
}

void publish(const Options& o, const std::string& report)
{
  std::string text = report;
  if (o.format == "text") {
    std::ostringstream ss;
    render_text(json::parse(report), "", ss);
    text = ss.str();
  } else if (text.empty() || text.back() != '\n') {
    text += "\n";
  }
  if (o.output.empty())
    std::cout << text;
  else
    write_file(o.output, text);
}

int finish(const Options& o, char* report, int positive)
{
  publish(o, take(report));
  return positive ? exit_positive : exit_negative;
}

json param_object(const Options& o)
{
  json params = json::object();
  if (o.n > 0)
    params["n"] = o.n;
  if (!o.diag.empty()) {
    json a = json::parse(o.diag, nullptr, false);
    if (a.is_discarded() || !a.is_array()) {
      a = json::array();
      std::stringstream ss(o.diag);
      std::string item;
      while (std::getline(ss, item, ','))
        a.push_back(item);
    }
    params["A"] = a;
  }
  if (o.max_l_set)
    params["max_l"] = o.max_l;
  if (o.beyond)
    params["beyond_degree"] = true;
  for (const auto& kv : o.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: parameter '" << kv << "' must have the form key=value\n";
      throw Failure{exit_input};
    }
    const std::string value = kv.substr(eq + 1);
    json v = json::parse(value, nullptr, false);
    params[kv.substr(0, eq)] = v.is_discarded() ? json(value) : v;
  }
  return params;
}

int run(const std::string& command, const Options& o)
{
  char* report = nullptr;
  int positive = 0;
  const pf_config cfg = config(o);

  if (command == "validate") {
    Algebra a = load_algebra(o.input);
    Operator op = o.op.empty() ? Operator() : load_operator(o.op, a.get());
    check(pf_validate(a.get(), op.get(), &report, &positive), "validate");
    const std::string text = take(report);
    publish(o, text);
    if (json::parse(text)["jacobi"]["verdict"] != "VALID")
      return exit_input;
    return positive ? exit_positive : exit_negative;
  }
  if (command == "pencil") {
    Pencil p = load_pencil(o);
    check(pf_pencil_report(p.get(), &report, &positive), "pencil");
    return finish(o, report, positive);
  }
  if (command == "rank-profile" || command == "kronecker") {
    Pencil p = load_pencil(o);
    check(pf_kronecker(p.get(), &cfg, &report, &positive), command);
    return finish(o, report, positive);
  }
  if (command == "index") {
    Algebra a = load_algebra(o.input);
    check(pf_index(a.get(), &cfg, &report, &positive), "index");
    return finish(o, report, positive);
  }
  if (command == "corollary" || command == "criterion") {
    Algebra a = load_algebra(o.input);
    Operator op = load_operator(o.op, a.get());
    auto fn = command == "corollary" ? pf_corollary : pf_criterion;
    check(fn(a.get(), op.get(), &cfg, &report, &positive), command);
    return finish(o, report, positive);
  }
  if (command == "integrals") {
    Algebra a;
    Operator op;
    Family cas;
    if (o.kind == "casimir") {
      a = load_algebra(o.input);
      op = load_operator(o.op, a.get());
      cas = load_family(o.casimirs, "--casimirs");
    }
    pf_family* f = nullptr;
    check(pf_family_build(o.kind.c_str(), param_object(o).dump().c_str(), a.get(), op.get(), cas.get(), &f),
          "integrals");
    Family fam(f);
    check(pf_family_to_json(fam.get(), &report), "integrals");
    return finish(o, report, 1);
  }
  if (command == "involution" || command == "completeness") {
    Family f = load_family(o.family, "--family");
    Pencil p = load_pencil(o);
    if (command == "involution")
      check(pf_involution(f.get(), p.get(), &report, &positive), command);
    else
      check(pf_completeness(f.get(), p.get(), &cfg, &report, &positive), command);
    return finish(o, report, positive);
  }
  if (command == "lenard") {
    check(pf_lenard(param_object(o).dump().c_str(), &report, &positive), "lenard");
    return finish(o, report, positive);
  }
  if (command == "equivalence") {
    Family f1 = load_family(o.family, "--family");
    Family f2 = load_family(o.family2, "--family2");
    check(pf_equivalence(f1.get(), f2.get(), &cfg, &report, &positive), "equivalence");
    return finish(o, report, positive);
  }
  if (command == "rais") {
    Algebra h = load_algebra(o.input);
    require_flag(o.rep, "--rep");
    check(pf_rais(h.get(), read_file(o.rep).c_str(), &cfg, &report, &positive), "rais");
    return finish(o, report, positive);
  }
  if (command == "catalog") {
    if (o.catalog_action == "list") {
      check(pf_catalog_list(&report), "catalog");
      json names = json::parse(take(report));
      std::ostringstream ss;
      for (const auto& n : names)
        ss << n.get<std::string>() << "\n";
      if (o.output.empty())
        std::cout << ss.str();
      else
        write_file(o.output, ss.str());
      return exit_positive;
    }
    if (o.catalog_action != "emit" || o.catalog_name.empty()) {
      std::cerr << "error: usage: catalog list | catalog emit <name> [key=value ...]\n";
      return exit_input;
    }
    pf_algebra* a = nullptr;
    pf_operator* op = nullptr;
    pf_pencil* p = nullptr;
    check(pf_catalog_build(o.catalog_name.c_str(), param_object(o).dump().c_str(), &a, &op, &p, &report),
          "catalog");
    Algebra alg(a);
    Operator oper(op);
    Pencil pen(p);
    const std::string entry = take(report);
    if (o.output.empty() && o.op_out.empty() && o.pencil_out.empty()) {
      std::cout << entry << "\n";
      return exit_positive;
    }
    if (!o.output.empty()) {
      check(pf_algebra_to_json(alg.get(), &report), "catalog");
      write_file(o.output, take(report) + "\n");
    }
    if (!o.op_out.empty()) {
      if (!oper) {
        std::cerr << "error: catalog entry '" << o.catalog_name << "' has no operator\n";
        return exit_input;
      }
      check(pf_operator_to_json(oper.get(), &report), "catalog");
      write_file(o.op_out, take(report) + "\n");
    }
    if (!o.pencil_out.empty()) {
      if (!pen) {
        std::cerr << "error: catalog entry '" << o.catalog_name << "' has no pencil\n";
        return exit_input;
      }
      check(pf_pencil_to_json(pen.get(), &report), "catalog");
      write_file(o.pencil_out, take(report) + "\n");
    }
    return exit_positive;
  }
  std::cerr << "error: unknown command '" << command << "'\n";
  return exit_input;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact verification of Nijenhuis operators, Lie-Poisson pencils and their first integrals"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    sub->add_option("--samples", o.samples, "Random points per estimate")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--coord-bound", o.coord_bound, "Coordinate bound for sampled points")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "Covector search budget")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", o.output, "Write the report to this file");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };
  auto inputs = [&](CLI::App* sub, bool with_pencil) {
    sub->add_option("-i,--input", o.input, "Algebra JSON");
    sub->add_option("-N,--operator", o.op, "Operator JSON");
    if (with_pencil)
      sub->add_option("--pencil", o.pencil, "Pencil JSON (two algebras and the exceptional list)");
  };
  auto family_params = [&](CLI::App* sub) {
    sub->add_option("-n", o.n, "Matrix size");
    sub->add_option("-A,--diag", o.diag, "Diagonal of A, as a JSON array or comma list");
  };

  auto* validate = app.add_subcommand("validate", "Check Jacobi (and torsion when -N is given)");
  inputs(validate, false);
  auto* pencil = app.add_subcommand("pencil", "Build a pencil and check compatibility");
  inputs(pencil, true);
  auto* rank_profile = app.add_subcommand("rank-profile", "Pencil rank profile");
  inputs(rank_profile, true);
  auto* kronecker = app.add_subcommand("kronecker", "Certify that a pencil is Kronecker");
  inputs(kronecker, true);
  auto* index = app.add_subcommand("index", "Index of a Lie algebra");
  inputs(index, false);
  auto* corollary = app.add_subcommand("corollary", "Subalgebra index condition for every eigenvalue");
  inputs(corollary, false);
  auto* criterion = app.add_subcommand("criterion", "Coisotropy criterion with covector search");
  inputs(criterion, false);
  auto* integrals = app.add_subcommand("integrals", "Build a family of first integrals");
  integrals->add_option("family", o.kind, "manakov | resolvent | borel | casimir")
      ->required()
      ->check(CLI::IsMember({"manakov", "resolvent", "borel", "casimir"}));
  family_params(integrals);
  integrals->add_option("--max-l", o.max_l, "Highest expansion order")->each([&](const std::string&) {
    o.max_l_set = true;
  });
  integrals->add_flag("--beyond-degree", o.beyond, "Keep orders above k-1");
  integrals->add_option("--casimirs", o.casimirs, "Family JSON of Casimirs (casimir family)");
  inputs(integrals, false);
  auto* involution = app.add_subcommand("involution", "Pairwise brackets of a family under both brackets");
  involution->add_option("--family", o.family, "Family JSON");
  inputs(involution, true);
  auto* lenard = app.add_subcommand("lenard", "Lenard relations for the gl_n left-multiplication pencil");
  family_params(lenard);
  auto* completeness = app.add_subcommand("completeness", "Rank of the family differentials");
  completeness->add_option("--family", o.family, "Family JSON");
  inputs(completeness, true);
  auto* equivalence = app.add_subcommand("equivalence", "Compare differential spans of two families");
  equivalence->add_option("--family", o.family, "First family JSON");
  equivalence->add_option("--family2", o.family2, "Second family JSON");
  auto* rais = app.add_subcommand("rais", "Index formula for a semidirect product");
  inputs(rais, false);
  rais->add_option("--rep", o.rep, "Representation JSON");
  auto* catalog = app.add_subcommand("catalog", "List or emit catalog entries");
  catalog->add_option("action", o.catalog_action, "list | emit")->required()->check(CLI::IsMember({"list", "emit"}));
  catalog->add_option("name", o.catalog_name, "Entry name");
  catalog->add_option("params", o.params, "Parameters as key=value (values may be JSON)");
  catalog->add_option("-N,--operator-out", o.op_out, "Write the operator JSON here");
  catalog->add_option("--pencil-out", o.pencil_out, "Write the pencil JSON here");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
    common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_input;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_internal;
  }
}
