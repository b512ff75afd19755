#pragma once

#include <optional>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/half_integer.hpp"
#include "vlink/invariants.hpp"

namespace vlink {

// A (virtualizations, crossing changes) pair; n may be a half-integer when it
// comes from the J_n lower bound.
struct UnknottingIndex {
  int m = 0;
  HalfInteger n;

  static UnknottingIndex of(int m, HalfInteger n) { return {m, n}; }
  static UnknottingIndex of_ints(int m, long n) { return {m, HalfInteger::from_int(n)}; }
  friend bool operator==(const UnknottingIndex&, const UnknottingIndex&) = default;
};

enum class Ordering { Less, Equal, Greater };

// Dictionary order: m first, then n (exact rational comparison).
Ordering compare_dict(const UnknottingIndex& a, const UnknottingIndex& b);

// (span(D), sum of pair ell + half the total |J_k| mass), a lower bound for
// the unknotting index of every diagram of the link.
UnknottingIndex lower_bound(const Diagram& d);

// Both knot bounds: (1,0) when the writhe spectrum is asymmetric (J_k != J_-k
// for some k), and (0, half the |J_k| mass) always. They are incomparable in
// general; effective() keeps the dictionary-greater one.
struct KnotLowerBound {
  std::optional<UnknottingIndex> asymmetry; // (1,0) when applicable
  UnknottingIndex spectral;

  UnknottingIndex effective() const {
    if (asymmetry && compare_dict(*asymmetry, spectral) == Ordering::Greater) return *asymmetry;
    return spectral;
  }
};

KnotLowerBound knot_lower_bound(const Diagram& knot); // throws NotAKnot

// (v, d(D)) when the diagram carries virtual-crossing metadata.
std::optional<UnknottingIndex> upper_bound(const Diagram& d);

// (v - 1, floor(n / 2)) for knots with v >= 1.
// Throws NotAKnot / MissingMetadata / NotApplicable.
UnknottingIndex knot_upper_bound(const Diagram& knot);

struct PairCertificate {
  int i = 0, j = 0;
  int span = 0;
  long ell_doubled = 0;
  long doubled_lk = 0;
};

struct BoundReport {
  UnknottingIndex lower;
  std::optional<UnknottingIndex> upper;
  std::vector<PairCertificate> pairs;           // one per unordered pair, (i,j) ascending
  std::vector<WritheSpectrum> component_writhes; // one per component
};

BoundReport bound_report(const Diagram& d);

} // namespace vlink
