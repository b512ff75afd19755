#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vlink/bounds.hpp"
#include "vlink/diagram.hpp"
#include "vlink/moves.hpp"
#include "vlink/search.hpp"

namespace vlink {

// Standard pretzel diagram L(p_1,...,p_n) with the global labelling
// 1..sum(p): strand i owns the labels following the prefix sum. Crossing ids
// coincide with labels.
struct LabeledPretzel {
  std::vector<int> params;
  Diagram diagram;
  std::map<int, int> label_to_crossing;
  std::map<int, int> strand_of_label; // strands are 1-indexed

  int total_labels() const {
    int t = 0;
    for (int p : params) t += p;
    return t;
  }
};

// Supported families: n even with all p_i odd (2 components, every crossing a
// same-sign linking crossing), n even >= 4 with all p_i even (n components,
// strand i joining components i-1 and i cyclically), and n = 2 with p_1 + p_2
// even. The concrete over/under conventions are pinned by the calibration
// properties (span and linking number under label virtualization), not by a
// drawing. Throws EmptyParams / PreconditionViolated.
LabeledPretzel pretzel(const std::vector<int>& p);

// Inclusive label range of strand i (1-indexed).
std::pair<int, int> strand_labels(const std::vector<int>& p, int i);

// Virtualizes the crossings carrying the given labels; the result records
// virtual_count = |labels|. Throws UnknownLabel.
Diagram virtualize_labels(const LabeledPretzel& lp, const std::set<int>& labels);

// Closed-form unknotting indices for the supported pretzel families:
// k labels virtualized of which k1 even (global parity), or per-strand even /
// odd virtualization counts.
UnknottingIndex thm31_index(const std::vector<int>& p, int k, int k1);
UnknottingIndex thm32_index(const std::vector<int>& p, const std::vector<int>& k_even,
                            const std::vector<int>& k_odd);
UnknottingIndex cor33_index(int p1, int p2, int k, int k1);

// The explicit unknotting recipe from the theorems' proofs: first kill the
// span by virtualizing majority-side crossings (positive over / negative
// under while traversing the pair's first component), then change enough
// crossings to zero every linking number.
struct ProofWitness {
  std::set<int> virtualized;
  std::set<int> changed;
};
ProofWitness proof_witness(const Diagram& d);

struct FamilyReport {
  std::vector<int> params;
  long subsets_checked = 0;
  long searched = 0; // subsets additionally cross-checked against the search
  std::vector<std::string> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

// Machine check of the closed forms: for every virtualization label subset
// (up to max_subsets in total), the formula must equal the span, the lower
// bound, and the bounded search result, and the proof witness must replay to
// a crossing-free diagram.
FamilyReport verify_family(const std::vector<int>& p, long max_subsets = 1024,
                           const MoveBudget& b = {}, const SearchCaps& caps = {});

} // namespace vlink
