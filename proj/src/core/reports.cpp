#include "reports.hpp"

namespace pforge {

namespace {

json subspace_to_json(const SubspaceBasis& b)
{
  json out = json::array();
  for (const auto& v : b.vectors())
    out.push_back(vector_to_json(v));
  return out;
}

json member_to_json(const MemberRank& m)
{
  json out{{"s", {rational_to_json(m.s1), rational_to_json(m.s2)}},
           {"best_rank", m.best_rank},
           {"samples_used", m.samples_used},
           {"bound_used", m.bound_used},
           {"zero_member", m.zero_member},
           {"reached", m.reached}};
  out["lambda"] = m.lambda ? json(rational_to_json(*m.lambda)) : json("infinity");
  out["witness"] = m.witness ? vector_to_json(*m.witness) : json(nullptr);
  return out;
}

}  // namespace

json violation_report_to_json(const ViolationReport& r)
{
  json list = json::array();
  for (const auto& v : r.violations)
    list.push_back({{"kind", v.kind}, {"indices", v.indices}, {"residual", rational_to_json(v.residual)}});
  return {{"verdict", r.empty() ? "VALID" : "INVALID"}, {"violations", list}, {"truncated", r.truncated}};
}

json torsion_to_json(const TorsionTensor& t, std::size_t max_pairs)
{
  json nonzero = json::array();
  const auto& v = t.values;
  for (std::size_t i = 0; i < v.dim() && nonzero.size() < max_pairs; ++i)
    for (std::size_t j = i + 1; j < v.dim() && nonzero.size() < max_pairs; ++j) {
      Vector val = v.bracket_basis(i, j);
      if (!is_zero(val))
        nonzero.push_back({{"pair", {i, j}}, {"value", vector_to_json(val)}});
    }
  return {{"verdict", t.is_zero() ? "NIJENHUIS" : "TORSION_NONZERO"}, {"nonzero_pairs", nonzero}};
}

json index_to_json(const IndexResult& r)
{
  return {{"verdict", "CERTIFIED_UPPER_BOUND"},
          {"index", r.index},
          {"max_rank", r.max_rank},
          {"witness", vector_to_json(r.witness)},
          {"rounds", r.rounds},
          {"coord_bound", r.coord_bound}};
}

json coisotropy_numbers_to_json(const CoisotropyNumbers& r)
{
  return {{"ind_a", r.ind_a},
          {"codim_a", r.codim_a},
          {"tangent_rank", r.tangent_rank},
          {"stabilizer", subspace_to_json(r.stabilizer)},
          {"complement", r.complement}};
}

json rank_profile_to_json(const PencilRankProfile& p)
{
  json members = json::array();
  for (const auto& m : p.per_exceptional)
    members.push_back(member_to_json(m));
  return {{"verdict", verdict_name(p.verdict)},
          {"dim", p.dim},
          {"generic_rank", p.generic_rank},
          {"generic_lambda", rational_to_json(p.generic_lambda)},
          {"generic_witness", vector_to_json(p.generic_witness)},
          {"exceptional_members", members},
          {"infinity_member", member_to_json(p.infinity_member)},
          {"index_upper_bound", p.index_upper_bound},
          {"generic_matches_index", p.generic_matches_index},
          {"degenerate", p.degenerate},
          {"samples", p.samples},
          {"coord_bound", p.coord_bound},
          {"seed", p.seed}};
}

json coisotropy_report_to_json(const CoisotropyReport& r, bool theorem)
{
  json list = json::array();
  for (const auto& e : r.eigenvalues) {
    json item{{"lambda", rational_to_json(e.lambda)},
              {"subalgebra", subspace_to_json(e.subalgebra)},
              {"subalgebra_dim", e.subalgebra.dim()},
              {"codim", e.codim},
              {"subalgebra_index", e.subalgebra_index},
              {"corollary_holds", e.corollary_holds}};
    if (e.searched) {
      item["covector"] = e.covector ? vector_to_json(*e.covector) : json(nullptr);
      item["complement"] = e.complement;
      item["ind_c"] = e.ind_c;
      item["codim_c"] = e.codim_c;
      item["attempts"] = e.attempts;
      item["criterion_holds"] = e.criterion_holds;
    }
    list.push_back(std::move(item));
  }
  json out{{"algebra_index", r.algebra_index}, {"eigenvalues", list}, {"corollary_holds", r.corollary_holds}};
  out["verdict"] = theorem ? verdict_name(r.verdict) : (r.corollary_holds ? "HOLDS" : "FAILS");
  return out;
}

json rais_to_json(const RaisReport& r)
{
  return {{"verdict", r.holds ? "HOLDS" : "FAILS"},
          {"lhs_index", r.lhs_index},
          {"orbit_codim", r.orbit_codim},
          {"stabilizer_index", r.stabilizer_index},
          {"stabilizer_dim", r.stabilizer_dim},
          {"rhs", r.orbit_codim + r.stabilizer_index},
          {"witness_a", vector_to_json(r.witness_a)},
          {"lhs_witness", vector_to_json(r.lhs_witness)}};
}

json involutivity_to_json(const InvolutivityReport& r, const IntegralFamily& f)
{
  json pairs = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"pair", {f.members[p.i].name, f.members[p.j].name}},
                     {"zero_c1", p.zero_first},
                     {"zero_c2", p.zero_second},
                     {"terms_c1", p.terms_first},
                     {"terms_c2", p.terms_second}});
  return {{"verdict", r.involutive ? "INVOLUTIVE" : "NOT_INVOLUTIVE"}, {"members", r.members}, {"pairs", pairs}};
}

json lenard_to_json(const LenardReport& r)
{
  json rel = json::array();
  for (const auto& x : r.relations)
    rel.push_back({{"relation", x.relation},
                   {"k", x.k},
                   {"l", x.l},
                   {"holds", x.holds},
                   {"first_difference", x.first_difference ? json(*x.first_difference) : json(nullptr)}});
  return {{"verdict", r.holds ? "HOLDS" : "FAILS"}, {"relations", rel}, {"repeated_eigenvalues", r.repeated_eigenvalues}};
}

json completeness_to_json(const CompletenessReport& r)
{
  return {{"verdict", r.complete ? "COMPLETE" : "INCOMPLETE"},
          {"max_rank", r.max_rank},
          {"dim", r.dim},
          {"index", r.index},
          {"target", r.target},
          {"witness", vector_to_json(r.witness)}};
}

json span_equivalence_to_json(const SpanEquivalenceReport& r)
{
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"point", vector_to_json(s.point)},
                       {"rank_first", s.rank_first},
                       {"rank_second", s.rank_second},
                       {"rank_union", s.rank_union}});
  return {{"verdict", r.equivalent ? "EQUIVALENT" : "NOT_EQUIVALENT"}, {"samples", samples}};
}

json catalog_entry_to_json(const CatalogEntry& e)
{
  json out{{"name", e.name}, {"parameters", e.parameters}, {"algebra", algebra_to_json(e.algebra)}};
  if (e.op)
    out["operator"] = operator_to_json(*e.op);
  if (e.pencil)
    out["pencil"] = pencil_to_json(*e.pencil);
  return out;
}

}  // namespace pforge
