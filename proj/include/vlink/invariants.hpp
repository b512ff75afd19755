#pragma once

#include <map>

#include "vlink/diagram.hpp"
#include "vlink/half_integer.hpp"

namespace vlink {

// n-th writhes J_n of a knot diagram, keyed by nonzero index; zero sums are
// dropped.
struct WritheSpectrum {
  std::map<int, int> entries;

  bool empty() const { return entries.empty(); }
  int at(int n) const {
    auto it = entries.find(n);
    return it == entries.end() ? 0 : it->second;
  }
  long abs_sum() const {
    long s = 0;
    for (auto& [n, j] : entries) s += (j < 0 ? -j : j);
    return s;
  }
  bool symmetric() const {
    for (auto& [n, j] : entries)
      if (at(-n) != j) return false;
    return true;
  }
  friend bool operator==(const WritheSpectrum&, const WritheSpectrum&) = default;
};

// Linking-crossing counts of a component pair, classified while traversing the
// first component: r = over there, l = under, split by crossing sign.
struct PairLinkData {
  int r_plus = 0, r_minus = 0, l_plus = 0, l_minus = 0;

  int total() const { return r_plus + r_minus + l_plus + l_minus; }
  friend bool operator==(const PairLinkData&, const PairLinkData&) = default;
};

// 2*lk(d): the signed count of linking crossings.
long doubled_linking_number(const Diagram& d);

PairLinkData pair_link_data(const Diagram& d, int i, int j);

// |r+ - r- - l+ + l-| of the pair subdiagram; traversal-symmetric.
int pair_span(const Diagram& d, int i, int j);

// Sum of pair_span over unordered component pairs.
int total_span(const Diagram& d);

// Ind of a chord in a one-component diagram. A chord delta crosses gamma_c iff
// exactly one of its endpoints lies on the open arc from the over endpoint of
// c to its under endpoint; delta lands on the r side iff its over endpoint is
// the one on that arc.
int index_of_crossing(const Diagram& knot, int crossing_id);

WritheSpectrum nth_writhes(const Diagram& knot);

// 2*ell of the pair subdiagram via the closed form max(0, |2 lk| - span).
long pair_ell_doubled(const Diagram& d, int i, int j);

// Warping degree d(D). The linking term is base-point independent (a linking
// crossing warps iff it is under for the lower-indexed component); the self
// term minimizes per component over base arcs. With minimize_component_order,
// additionally minimizes the linking term over component permutations.
int warping_degree(const Diagram& d, bool minimize_component_order = false);

} // namespace vlink
