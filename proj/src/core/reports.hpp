#pragma once

#include "catalog.hpp"
#include "integrals.hpp"
#include "json_io.hpp"
#include "pencil_analysis.hpp"

namespace pforge {

// Every report carries a "verdict" string plus its witnesses.
json violation_report_to_json(const ViolationReport& r);
json torsion_to_json(const TorsionTensor& t, std::size_t max_pairs = 10);
json index_to_json(const IndexResult& r);
json coisotropy_numbers_to_json(const CoisotropyNumbers& r);
json rank_profile_to_json(const PencilRankProfile& p);
json coisotropy_report_to_json(const CoisotropyReport& r, bool theorem);
json rais_to_json(const RaisReport& r);
json involutivity_to_json(const InvolutivityReport& r, const IntegralFamily& f);
json lenard_to_json(const LenardReport& r);
json completeness_to_json(const CompletenessReport& r);
json span_equivalence_to_json(const SpanEquivalenceReport& r);
json catalog_entry_to_json(const CatalogEntry& e);

}  // namespace pforge
