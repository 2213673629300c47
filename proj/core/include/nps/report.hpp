#pragma once

// JSON views of library values. Numbers are exact: a CycInt is
// {"m": m, "coeffs": [...]} with phi(m) integers in ascending degree.

#include <nlohmann/json.hpp>

#include "nps/cyclotomic.hpp"
#include "nps/cyclotomy.hpp"
#include "nps/diffset.hpp"
#include "nps/multiplier.hpp"
#include "nps/search.hpp"
#include "nps/sequence.hpp"

namespace nps {

using Json = nlohmann::ordered_json;

Json to_json(const CycInt& x, bool pretty = false);
CycInt cycint_from_json(const Json& j);

Json to_json(const NpsClassification& c, bool pretty = false);
/// {m, period, zeros, spectrum, classification}.
Json spectrum_report(const AlmostSequence& seq, bool pretty = false);

Json to_json(const PdpdsParams& p);
Json to_json(const BucketFailure& f);
/// {n, m, ell, k, params} on success, {n, m, ell, k, failure} otherwise.
Json pdpds_report(const DiffSet& r, int ell, const PdpdsVerdict& verdict);
Json to_json(const DiffSet& r);
Json to_json(const SiIdentityReport& rep);

Json to_json(const Multiplier& mult);
Json to_json(const Orbit& o);
Json to_json(const OrbitCollection& c);

Json to_json(const IdentityReport& rep);
Json to_json(const CyclotomicClasses& c);

/// Parses a search spec. Keys: m, period, zeros ("consecutive", an array of
/// positions, or {"count": s}), filter ("any", {"uniform": g},
/// {"pair": [g1, g2]}), nontrivial, dedup ([ "rotation", "scalar",
/// "reversal" ]), node_budget, time_budget, symmetry_prune,
/// correlation_prune, prefilter, jobs. Throws std::invalid_argument.
SearchSpec search_spec_from_json(const Json& j);
Json to_json(const SearchSpec& spec);
Json to_json(const SearchReport& report);

}  // namespace nps
