#include "nps/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace nps {

Json to_json(const CycInt& x, bool pretty) {
  Json j{{"m", x.order()}, {"coeffs", std::vector<Int>(x.coeffs().begin(), x.coeffs().end())}};
  if (pretty) j["pretty"] = x.to_string();
  return j;
}

CycInt cycint_from_json(const Json& j) {
  try {
    const int m = j.at("m").get<int>();
    const auto coeffs = j.at("coeffs").get<std::vector<Int>>();
    return CycInt::from_power_counts(m, coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed CycInt: ") + e.what());
  }
}

Json to_json(const NpsClassification& c, bool pretty) {
  Json j{{"kind", std::string(to_string(c.kind))}, {"type", c.type_string()}};
  using K = NpsClassification::Kind;
  if (c.kind == K::UniformNps || c.kind == K::Perfect) j["gamma"] = c.gamma1;
  if (c.kind == K::TwoValuedNps) {
    j["gamma1"] = c.gamma1;
    j["gamma2"] = c.gamma2;
    j["ell"] = c.ell;
  }
  Json values = Json::array();
  for (const auto& v : c.distinct_values) values.push_back(to_json(v, pretty));
  j["distinct_values"] = std::move(values);
  return j;
}

Json spectrum_report(const AlmostSequence& seq, bool pretty) {
  const NpsClassification c = classify(seq);
  Json spec = Json::array();
  for (const auto& v : c.spectrum) spec.push_back(to_json(v, pretty));
  Json j{{"m", seq.order()}, {"period", seq.period()}, {"zeros", seq.zero_positions()}, {"spectrum", std::move(spec)},
         {"classification", to_json(c, pretty)}};
  if (!seq.label().empty()) j["label"] = seq.label();
  return j;
}

Json to_json(const PdpdsParams& p) {
  return Json{{"ell", p.ell},         {"n", p.n},       {"m", p.m},
              {"k", p.k},             {"lambda1", p.lambda1}, {"lambda2", p.lambda2},
              {"lambda3", p.lambda3}, {"mu1", p.mu1},   {"mu2", p.mu2},
              {"text", p.to_string()}, {"kind", std::string(to_string(special_case_of(p)))}};
}

namespace {
Json elem(GroupElem x) { return Json::array({x.h, x.p}); }
}  // namespace

Json to_json(const BucketFailure& f) {
  return Json{{"bucket", static_cast<int>(f.bucket)},
              {"bucket_name", std::string(to_string(f.bucket))},
              {"witnesses",
               Json::array({Json{{"element", elem(f.first)}, {"count", f.first_count}},
                            Json{{"element", elem(f.second)}, {"count", f.second_count}}})},
              {"message", f.to_string()}};
}

Json pdpds_report(const DiffSet& r, int ell, const PdpdsVerdict& verdict) {
  Json j{{"n", r.n()}, {"m", r.m()}, {"ell", ell}, {"k", r.size()}};
  if (const auto* p = std::get_if<PdpdsParams>(&verdict)) {
    j["ell"] = p->ell;
    j["params"] = to_json(*p);
  } else {
    j["failure"] = to_json(std::get<BucketFailure>(verdict));
  }
  return j;
}

Json to_json(const DiffSet& r) {
  Json elems = Json::array();
  for (auto x : r.elements()) elems.push_back(elem(x));
  return Json{{"n", r.n()}, {"m", r.m()}, {"elements", std::move(elems)}};
}

Json to_json(const SiIdentityReport& rep) {
  return Json{{"ok", rep.ok},
              {"sum_squares", rep.sum_squares},
              {"expected_sum_squares", rep.expected_sum_squares},
              {"shifted_products", rep.shifted_products},
              {"expected_shifted", rep.expected_shifted},
              {"violations", rep.violations}};
}

Json to_json(const Multiplier& mult) { return Json{{"t", mult.t}, {"g", elem(mult.shift)}}; }

Json to_json(const Orbit& o) {
  Json j = Json::array();
  for (auto x : o.elements) j.push_back(elem(x));
  return j;
}

Json to_json(const OrbitCollection& c) {
  Json orbits = Json::array();
  for (const auto& o : c.orbits) orbits.push_back(to_json(o));
  Json j{{"orbits", std::move(orbits)}, {"set", to_json(c.set)}};
  j["params"] = c.params ? to_json(*c.params) : Json(nullptr);
  return j;
}

Json to_json(const IdentityReport& rep) {
  return Json{{"ok", rep.ok}, {"checks", rep.checks}, {"violations", rep.violations}};
}

Json to_json(const CyclotomicClasses& c) {
  return Json{{"q", c.q()}, {"m", c.m()}, {"f", c.f()}, {"alpha", c.alpha()}, {"classes", c.classes()}};
}

namespace {

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

}  // namespace

SearchSpec search_spec_from_json(const Json& j) {
  SearchSpec s;
  try {
    if (!j.is_object()) throw std::invalid_argument("search spec must be a JSON object");
    static const std::vector<std::string> known{"m", "period", "zeros", "filter", "nontrivial", "dedup",
                                                "node_budget", "time_budget", "symmetry_prune",
                                                "correlation_prune", "prefilter", "jobs"};
    for (const auto& [key, value] : j.items())
      if (std::find(known.begin(), known.end(), key) == known.end())
        throw std::invalid_argument("search spec: unknown key '" + key + "'");

    s.m = j.at("m").get<int>();
    s.period = j.at("period").get<int>();
    const Json& z = j.contains("zeros") ? j.at("zeros") : Json("consecutive");
    if (z.is_string()) {
      if (z.get<std::string>() != "consecutive") throw std::invalid_argument("search spec: unknown zeros mode");
      s.zero_mode = SearchSpec::ZeroMode::Consecutive;
    } else if (z.is_array()) {
      s.zero_mode = SearchSpec::ZeroMode::Explicit;
      s.zeros = z.get<std::vector<int>>();
    } else if (z.is_object()) {
      s.zero_mode = SearchSpec::ZeroMode::Count;
      s.zero_count = z.at("count").get<int>();
    } else {
      throw std::invalid_argument("search spec: malformed zeros");
    }

    const Json& f = j.contains("filter") ? j.at("filter") : Json("any");
    if (f.is_string() && f.get<std::string>() == "any") {
      s.filter = SearchSpec::Filter::AnyNps;
    } else if (f.is_object() && f.contains("uniform")) {
      s.filter = SearchSpec::Filter::Uniform;
      s.gamma1 = f.at("uniform").get<Int>();
    } else if (f.is_object() && f.contains("pair")) {
      s.filter = SearchSpec::Filter::Pair;
      const auto g = f.at("pair").get<std::vector<Int>>();
      if (g.size() != 2) throw std::invalid_argument("search spec: pair filter needs [gamma1, gamma2]");
      s.gamma1 = g[0];
      s.gamma2 = g[1];
    } else {
      throw std::invalid_argument("search spec: malformed filter");
    }

    s.nontrivial_only = get_or(j, "nontrivial", false);
    for (const auto& d : get_or(j, "dedup", std::vector<std::string>{})) {
      if (d == "rotation") {
        s.dedup_rotation = true;
      } else if (d == "scalar") {
        s.dedup_scalar = true;
      } else if (d == "reversal") {
        s.dedup_reversal = true;
      } else {
        throw std::invalid_argument("search spec: unknown dedup flag '" + d + "'");
      }
    }
    if (j.contains("node_budget")) {
      const auto b = j.at("node_budget").get<long long>();
      if (b <= 0) throw std::invalid_argument("search spec: node budget must be positive");
      s.node_budget = static_cast<std::uint64_t>(b);
    }
    if (j.contains("time_budget") && !j.at("time_budget").is_null())
      s.time_budget_seconds = j.at("time_budget").get<double>();
    s.symmetry_prune = get_or(j, "symmetry_prune", true);
    s.correlation_prune = get_or(j, "correlation_prune", true);
    s.prefilter = get_or(j, "prefilter", false);
    const auto jobs = get_or(j, "jobs", 0);
    if (jobs < 0) throw std::invalid_argument("search spec: jobs must be >= 0");
    s.jobs = static_cast<unsigned>(jobs);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("search spec: ") + e.what());
  }
  s.validate();
  return s;
}

Json to_json(const SearchSpec& s) {
  Json j{{"m", s.m}, {"period", s.period}};
  switch (s.zero_mode) {
    case SearchSpec::ZeroMode::Consecutive:
      j["zeros"] = "consecutive";
      break;
    case SearchSpec::ZeroMode::Explicit:
      j["zeros"] = s.zeros;
      break;
    case SearchSpec::ZeroMode::Count:
      j["zeros"] = Json{{"count", s.zero_count}};
      break;
  }
  switch (s.filter) {
    case SearchSpec::Filter::AnyNps:
      j["filter"] = "any";
      break;
    case SearchSpec::Filter::Uniform:
      j["filter"] = Json{{"uniform", s.gamma1}};
      break;
    case SearchSpec::Filter::Pair:
      j["filter"] = Json{{"pair", {s.gamma1, s.gamma2}}};
      break;
  }
  j["nontrivial"] = s.nontrivial_only;
  Json dedup = Json::array();
  if (s.dedup_rotation) dedup.push_back("rotation");
  if (s.dedup_scalar) dedup.push_back("scalar");
  if (s.dedup_reversal) dedup.push_back("reversal");
  j["dedup"] = std::move(dedup);
  j["node_budget"] = s.node_budget;
  j["time_budget"] = s.time_budget_seconds ? Json(*s.time_budget_seconds) : Json(nullptr);
  j["symmetry_prune"] = s.symmetry_prune;
  j["correlation_prune"] = s.correlation_prune;
  j["prefilter"] = s.prefilter;
  return j;
}

Json to_json(const SearchReport& r) {
  Json found = Json::array();
  for (const auto& seq : r.found)
    found.push_back(Json{{"sequence", seq.to_string()}, {"type", classify(seq).type_string()}});
  Json counts = Json::object();
  for (const auto& [type, n] : r.counts_by_type) counts[type] = n;
  return Json{{"spec", to_json(r.spec)},
              {"found", std::move(found)},
              {"counts_by_type", std::move(counts)},
              {"nodes", r.nodes},
              {"leaves", r.leaves},
              {"pruned", Json{{"correlation", r.pruned_correlation}, {"symmetry", r.pruned_symmetry}}},
              {"exhaustive", r.exhaustive}};
}

}  // namespace nps
