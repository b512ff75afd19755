#include "vlink/bounds.hpp"

namespace vlink {

Ordering compare_dict(const UnknottingIndex& a, const UnknottingIndex& b) {
  if (a.m != b.m) return a.m < b.m ? Ordering::Less : Ordering::Greater;
  if (a.n != b.n) return a.n < b.n ? Ordering::Less : Ordering::Greater;
  return Ordering::Equal;
}

UnknottingIndex lower_bound(const Diagram& d) {
  int n = d.component_count();
  long doubled = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) doubled += pair_ell_doubled(d, i, j);
  for (int i = 0; i < n; ++i)
    doubled += nth_writhes(extract_component_knot(d, i)).abs_sum();
  return {total_span(d), HalfInteger::from_doubled(doubled)};
}

KnotLowerBound knot_lower_bound(const Diagram& knot) {
  if (knot.component_count() != 1)
    throw NotAKnot("knot bounds are defined on one-component diagrams");
  WritheSpectrum j = nth_writhes(knot);
  KnotLowerBound out;
  if (!j.symmetric()) out.asymmetry = UnknottingIndex::of_ints(1, 0);
  out.spectral = {0, HalfInteger::from_doubled(j.abs_sum())};
  return out;
}

std::optional<UnknottingIndex> upper_bound(const Diagram& d) {
  if (!d.virtual_count()) return std::nullopt;
  return UnknottingIndex::of_ints(*d.virtual_count(), warping_degree(d));
}

UnknottingIndex knot_upper_bound(const Diagram& knot) {
  if (knot.component_count() != 1)
    throw NotAKnot("knot bounds are defined on one-component diagrams");
  if (!knot.virtual_count()) throw MissingMetadata("virtual crossing count is not recorded");
  int v = *knot.virtual_count();
  if (v < 1) throw NotApplicable("requires at least one virtual crossing");
  return UnknottingIndex::of_ints(v - 1, knot.crossing_count() / 2);
}

BoundReport bound_report(const Diagram& d) {
  BoundReport report;
  report.lower = lower_bound(d);
  report.upper = upper_bound(d);
  int n = d.component_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PairCertificate cert;
      cert.i = i;
      cert.j = j;
      cert.span = pair_span(d, i, j);
      cert.ell_doubled = pair_ell_doubled(d, i, j);
      cert.doubled_lk = doubled_linking_number(extract_pair(d, i, j));
      report.pairs.push_back(cert);
    }
  for (int i = 0; i < n; ++i)
    report.component_writhes.push_back(nth_writhes(extract_component_knot(d, i)));
  return report;
}

} // namespace vlink
