#include "vlink/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace vlink {

long doubled_linking_number(const Diagram& d) {
  long sum = 0;
  for (const auto& [id, c] : d.crossings())
    if (!c.is_self()) sum += c.sign;
  return sum;
}

PairLinkData pair_link_data(const Diagram& d, int i, int j) {
  Diagram pair = extract_pair(d, i, j);
  PairLinkData data;
  for (const auto& [id, c] : pair.crossings()) {
    if (c.is_self()) continue;
    bool over_on_first = (c.over.component == 0);
    if (over_on_first)
      (c.sign > 0 ? data.r_plus : data.r_minus)++;
    else
      (c.sign > 0 ? data.l_plus : data.l_minus)++;
  }
  return data;
}

int pair_span(const Diagram& d, int i, int j) {
  PairLinkData p = pair_link_data(d, i, j);
  int v = p.r_plus - p.r_minus - p.l_plus + p.l_minus;
  return v < 0 ? -v : v;
}

int total_span(const Diagram& d) {
  int sum = 0;
  int n = d.component_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sum += pair_span(d, i, j);
  return sum;
}

int index_of_crossing(const Diagram& knot, int crossing_id) {
  if (knot.component_count() != 1) throw NotAKnot("index is defined on one-component diagrams");
  const Crossing& c = knot.crossing(crossing_id);
  int len = static_cast<int>(knot.component(0).size());
  auto on_arc = [&](int pos) {
    // Open arc from over(c) to under(c), walking along the orientation.
    int rel = (pos - c.over.position + len) % len;
    int end = (c.under.position - c.over.position + len) % len;
    return rel > 0 && rel < end;
  };
  int r_plus = 0, r_minus = 0, l_plus = 0, l_minus = 0;
  for (const auto& [id, delta] : knot.crossings()) {
    if (id == crossing_id) continue;
    bool over_in = on_arc(delta.over.position);
    bool under_in = on_arc(delta.under.position);
    if (over_in == under_in) continue; // zero or two endpoints on the arc
    if (over_in)
      (delta.sign > 0 ? r_plus : r_minus)++;
    else
      (delta.sign > 0 ? l_plus : l_minus)++;
  }
  return r_plus - r_minus - l_plus + l_minus;
}

WritheSpectrum nth_writhes(const Diagram& knot) {
  if (knot.component_count() != 1) throw NotAKnot("writhes are defined on one-component diagrams");
  WritheSpectrum spectrum;
  for (const auto& [id, c] : knot.crossings()) {
    int ind = index_of_crossing(knot, id);
    if (ind == 0) continue;
    spectrum.entries[ind] += c.sign;
  }
  std::erase_if(spectrum.entries, [](const auto& kv) { return kv.second == 0; });
  return spectrum;
}

long pair_ell_doubled(const Diagram& d, int i, int j) {
  Diagram pair = extract_pair(d, i, j);
  long dlk = doubled_linking_number(pair);
  long span = pair_span(pair, 0, 1);
  long v = (dlk < 0 ? -dlk : dlk) - span;
  return v > 0 ? v : 0;
}

namespace {

// Minimum, over base arcs of one component, of the number of self crossings
// first met at their under endpoint.
int self_warping_min(const Diagram& d, int comp) {
  const auto& seq = d.component(comp);
  int len = static_cast<int>(seq.size());
  if (len == 0) return 0;
  int best = -1;
  for (int base = 0; base < len; ++base) {
    int count = 0;
    std::map<int, bool> met;
    for (int k = 0; k < len; ++k) {
      const CodeEntry& e = seq[(base + k) % len];
      const Crossing& c = d.crossing(e.crossing_id);
      if (!c.is_self()) continue;
      if (met[e.crossing_id]) continue;
      met[e.crossing_id] = true;
      if (e.role == Role::Under) ++count;
    }
    if (best < 0 || count < best) best = count;
  }
  return best;
}

int linking_warping(const Diagram& d, const std::vector<int>& order_of) {
  int count = 0;
  for (const auto& [id, c] : d.crossings()) {
    if (c.is_self()) continue;
    // Warping iff the under endpoint belongs to the earlier component.
    if (order_of[c.under.component] < order_of[c.over.component]) ++count;
  }
  return count;
}

} // namespace

int warping_degree(const Diagram& d, bool minimize_component_order) {
  int self_term = 0;
  for (int i = 0; i < d.component_count(); ++i) self_term += self_warping_min(d, i);

  int n = d.component_count();
  std::vector<int> order_of(n);
  std::iota(order_of.begin(), order_of.end(), 0);
  int linking = linking_warping(d, order_of);
  if (minimize_component_order) {
    std::vector<int> perm = order_of;
    while (std::next_permutation(perm.begin(), perm.end()))
      linking = std::min(linking, linking_warping(d, perm));
  }
  return linking + self_term;
}

} // namespace vlink
