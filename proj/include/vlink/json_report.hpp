#pragma once

#include "json.hpp"
#include "vlink/bounds.hpp"
#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/pretzel.hpp"
#include "vlink/search.hpp"

namespace vlink {

using json = nlohmann::ordered_json;

// Half-integers go on the wire exactly: the doubled integer plus a decimal
// convenience string.
inline json to_json(const HalfInteger& h) {
  return json{{"doubled", h.doubled()}, {"value", h.str()}};
}

inline json to_json(const UnknottingIndex& u) {
  return json{{"m", u.m}, {"n", to_json(u.n)}};
}

inline json to_json(const WritheSpectrum& w) {
  json entries = json::object();
  for (const auto& [n, v] : w.entries) entries[std::to_string(n)] = v;
  return entries;
}

inline json to_json(const MoveTrace& trace) {
  json arr = json::array();
  for (const MoveRecord& rec : trace)
    arr.push_back(json{{"move", rec.move}, {"crossings", rec.crossings},
                       {"positions", rec.positions}});
  return arr;
}

inline json pair_table_json(const Diagram& d) {
  json pairs = json::array();
  int n = d.component_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Diagram sub = extract_pair(d, i, j);
      pairs.push_back(json{{"i", i},
                           {"j", j},
                           {"span", pair_span(d, i, j)},
                           {"doubled_lk", doubled_linking_number(sub)},
                           {"ell", to_json(HalfInteger::from_doubled(pair_ell_doubled(d, i, j)))}});
    }
  return pairs;
}

inline json invariants_json(const Diagram& d) {
  json writhes = json::array();
  for (int i = 0; i < d.component_count(); ++i)
    writhes.push_back(to_json(nth_writhes(extract_component_knot(d, i))));
  json out{{"gauss_code", serialize(d)},
           {"components", d.component_count()},
           {"crossings", d.crossing_count()},
           {"total_span", total_span(d)},
           {"doubled_lk", doubled_linking_number(d)},
           {"warping_degree", warping_degree(d)},
           {"pairs", pair_table_json(d)},
           {"component_writhes", writhes}};
  if (d.virtual_count())
    out["virtual_count"] = *d.virtual_count();
  else
    out["virtual_count"] = nullptr;
  return out;
}

inline json bounds_json(const BoundReport& r) {
  json out{{"lower", to_json(r.lower)}};
  out["upper"] = r.upper ? to_json(*r.upper) : json(nullptr);
  json pairs = json::array();
  for (const PairCertificate& c : r.pairs)
    pairs.push_back(json{{"i", c.i},
                         {"j", c.j},
                         {"span", c.span},
                         {"doubled_lk", c.doubled_lk},
                         {"ell", to_json(HalfInteger::from_doubled(c.ell_doubled))}});
  out["pairs"] = pairs;
  json writhes = json::array();
  for (const WritheSpectrum& w : r.component_writhes) writhes.push_back(to_json(w));
  out["component_writhes"] = writhes;
  return out;
}

inline json search_json(const SearchResult& r) {
  json out;
  if (r.kind == SearchResult::Kind::Exact) {
    out["kind"] = "exact";
    out["m"] = r.value.m;
    out["n"] = r.value.n.doubled() / 2; // exact results count whole moves
  } else {
    out["kind"] = "interval";
    out["lower"] = to_json(r.lower);
    out["upper"] = to_json(r.value);
    out["reason"] = r.reason;
  }
  out["value"] = to_json(r.value);
  if (r.witness) {
    json w{{"virtualized", json::array()}, {"changed", json::array()},
           {"trace", to_json(r.witness->trace)}};
    for (int id : r.witness->virtualized) w["virtualized"].push_back(id);
    for (int id : r.witness->changed) w["changed"].push_back(id);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["stats"] = json{{"candidates", r.stats.candidates}, {"unknowns", r.stats.unknowns}};
  return out;
}

inline json simplify_json(const SimplifyResult& r) {
  return json{{"gauss_code", serialize(r.diagram)},
              {"crossings", r.diagram.crossing_count()},
              {"trace", to_json(r.trace)},
              {"budget_exhausted", r.budget_exhausted}};
}

inline json pretzel_json(const LabeledPretzel& lp) {
  json strands = json::array();
  for (int i = 1; i <= static_cast<int>(lp.params.size()); ++i) {
    auto [lo, hi] = strand_labels(lp.params, i);
    strands.push_back(json{{"strand", i}, {"first_label", lo}, {"last_label", hi}});
  }
  return json{{"params", lp.params},
              {"gauss_code", serialize(lp.diagram)},
              {"components", lp.diagram.component_count()},
              {"labels", lp.total_labels()},
              {"strands", strands}};
}

inline json family_report_json(const FamilyReport& r) {
  return json{{"params", r.params},
              {"subsets_checked", r.subsets_checked},
              {"searched", r.searched},
              {"ok", r.ok()},
              {"discrepancies", r.discrepancies}};
}

} // namespace vlink
