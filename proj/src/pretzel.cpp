#include "vlink/pretzel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "vlink/invariants.hpp"

namespace vlink {

namespace {

void validate_params(const std::vector<int>& p) {
  if (p.empty()) throw EmptyParams("pretzel parameters must be non-empty");
  for (int v : p)
    if (v <= 0) throw PreconditionViolated("pretzel parameters must be positive");
}

bool all_odd(const std::vector<int>& p) {
  return std::all_of(p.begin(), p.end(), [](int v) { return v % 2 != 0; });
}
bool all_even(const std::vector<int>& p) {
  return std::all_of(p.begin(), p.end(), [](int v) { return v % 2 == 0; });
}

// Two components traversing the labels 1..total in order, odd labels over on
// the first component, all crossings positive. Realizes the odd-family (and
// n = 2) calibration: span |k - 2 k1| and doubled lk (sum p) - k under any
// label virtualization with counts (k total, k1 even).
Diagram serial_code(int total) {
  std::vector<std::vector<CodeEntry>> comps(2);
  std::map<int, int> signs;
  for (int label = 1; label <= total; ++label) {
    Role first = (label % 2 != 0) ? Role::Over : Role::Under;
    comps[0].push_back({label, first});
    comps[1].push_back({label, opposite(first)});
    signs[label] = +1;
  }
  return Diagram(std::move(comps), std::move(signs), 0);
}

// n components; strand s (1-indexed) joins components s-2 and s-1 (mod n,
// 0-indexed), odd-offset crossings over on the s-2 side, all positive.
// Component c lists strand c+1's crossings then strand c+2's, ascending.
// Localizes each pair span to one strand: |k_s - k'_s| after virtualization.
Diagram block_code(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<int> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + p[i];
  std::vector<std::vector<CodeEntry>> comps(n);
  std::map<int, int> signs;
  for (int c = 0; c < n; ++c) {
    int strand_b = c + 1;                    // c is this strand's s-1 side
    int strand_a = (c + 1) % n + 1;          // c is this strand's s-2 side
    for (int t = 1; t <= p[strand_b - 1]; ++t) {
      int label = prefix[strand_b - 1] + t;
      comps[c].push_back({label, (t % 2 != 0) ? Role::Under : Role::Over});
      signs[label] = +1;
    }
    for (int t = 1; t <= p[strand_a - 1]; ++t) {
      int label = prefix[strand_a - 1] + t;
      comps[c].push_back({label, (t % 2 != 0) ? Role::Over : Role::Under});
      signs[label] = +1;
    }
  }
  return Diagram(std::move(comps), std::move(signs), 0);
}

} // namespace

LabeledPretzel pretzel(const std::vector<int>& p) {
  validate_params(p);
  int n = static_cast<int>(p.size());
  LabeledPretzel lp;
  lp.params = p;
  int total = 0;
  for (int v : p) total += v;

  bool serial = (n % 2 == 0 && all_odd(p)) || (n == 2 && (p[0] + p[1]) % 2 == 0);
  if (serial) {
    lp.diagram = serial_code(total);
  } else if (n % 2 == 0 && all_even(p)) {
    lp.diagram = block_code(p);
  } else {
    throw PreconditionViolated(
        "unsupported pretzel family: need n even with all p_i odd, all p_i even, or n = 2 with "
        "p_1 + p_2 even");
  }

  int strand = 1, used = 0;
  for (int label = 1; label <= total; ++label) {
    while (used + p[strand - 1] < label) used += p[strand++ - 1];
    lp.label_to_crossing[label] = label;
    lp.strand_of_label[label] = strand;
  }
  return lp;
}

std::pair<int, int> strand_labels(const std::vector<int>& p, int i) {
  validate_params(p);
  if (i < 1 || i > static_cast<int>(p.size()))
    throw IndexOutOfRange("strand index out of range");
  int lo = 1;
  for (int s = 1; s < i; ++s) lo += p[s - 1];
  return {lo, lo + p[i - 1] - 1};
}

Diagram virtualize_labels(const LabeledPretzel& lp, const std::set<int>& labels) {
  std::set<int> ids;
  for (int label : labels) {
    auto it = lp.label_to_crossing.find(label);
    if (it == lp.label_to_crossing.end())
      throw UnknownLabel("label " + std::to_string(label) + " is not in 1..sum(p)");
    ids.insert(it->second);
  }
  return virtualize(lp.diagram, ids);
}

UnknottingIndex thm31_index(const std::vector<int>& p, int k, int k1) {
  validate_params(p);
  if (p.size() % 2 != 0 || !all_odd(p))
    throw PreconditionViolated("requires an even number of odd parameters");
  int total = 0;
  for (int v : p) total += v;
  if (k1 < 0 || k1 > k || k > total || k1 > total / 2 || k - k1 > total / 2)
    throw PreconditionViolated("infeasible (k, k1)");
  int m = std::abs(k - 2 * k1);
  long n = (k > 2 * k1) ? total / 2 - k + k1 : total / 2 - k1;
  return UnknottingIndex::of_ints(m, n);
}

UnknottingIndex cor33_index(int p1, int p2, int k, int k1) {
  validate_params({p1, p2});
  if ((p1 + p2) % 2 != 0) throw PreconditionViolated("requires p1 + p2 even");
  int total = p1 + p2;
  if (k1 < 0 || k1 > k || k > total || k1 > total / 2 || k - k1 > total / 2)
    throw PreconditionViolated("infeasible (k, k1)");
  int m = std::abs(k - 2 * k1);
  long n = (k > 2 * k1) ? (total - 2 * k + 2 * k1) / 2 : (total - 2 * k1) / 2;
  return UnknottingIndex::of_ints(m, n);
}

UnknottingIndex thm32_index(const std::vector<int>& p, const std::vector<int>& k_even,
                            const std::vector<int>& k_odd) {
  validate_params(p);
  int n_strands = static_cast<int>(p.size());
  if (n_strands % 2 != 0 || !all_even(p))
    throw PreconditionViolated("requires an even number of even parameters");
  if (static_cast<int>(k_even.size()) != n_strands ||
      static_cast<int>(k_odd.size()) != n_strands)
    throw PreconditionViolated("per-strand count lists must match the parameter count");
  for (int i = 0; i < n_strands; ++i)
    if (k_even[i] < 0 || k_odd[i] < 0 || k_even[i] > p[i] / 2 || k_odd[i] > p[i] / 2)
      throw PreconditionViolated("infeasible per-strand counts");

  if (n_strands == 2) {
    // With two strands both spans land on the same component pair and the
    // per-strand decomposition degenerates; the global-parity form gives the
    // correct value.
    int k = k_even[0] + k_odd[0] + k_even[1] + k_odd[1];
    return cor33_index(p[0], p[1], k, k_even[0] + k_even[1]);
  }

  long m = 0, nn = 0;
  for (int i = 0; i < n_strands; ++i) {
    int diff = std::abs(k_odd[i] - k_even[i]);
    m += diff;
    nn += (p[i] - k_even[i] - k_odd[i] - diff) / 2;
  }
  return UnknottingIndex::of_ints(static_cast<int>(m), nn);
}

ProofWitness proof_witness(const Diagram& d) {
  ProofWitness w;
  Diagram work = d;
  int nc = work.component_count();

  // Span elimination: repeatedly virtualize a majority-side crossing of the
  // first unbalanced pair (positive over / negative under seen from the
  // pair's first component, or the mirror choice when the excess is
  // negative).
  for (;;) {
    int pi = -1, pj = -1, excess = 0;
    for (int i = 0; i < nc && pi < 0; ++i)
      for (int j = i + 1; j < nc; ++j) {
        PairLinkData data = pair_link_data(work, i, j);
        int s = data.r_plus - data.r_minus - data.l_plus + data.l_minus;
        if (s != 0) {
          pi = i;
          pj = j;
          excess = s;
          break;
        }
      }
    if (pi < 0) break;
    int chosen = 0;
    for (const auto& [id, c] : work.crossings()) {
      if (c.is_self()) continue;
      int a = c.over.component, b = c.under.component;
      if (std::minmax(a, b) != std::minmax(pi, pj)) continue;
      bool over_on_first = (a == pi);
      bool majority = (excess > 0) ? (over_on_first ? c.sign > 0 : c.sign < 0)
                                   : (over_on_first ? c.sign < 0 : c.sign > 0);
      if (majority) {
        chosen = id;
        break;
      }
    }
    if (chosen == 0) throw PreconditionViolated("span elimination found no majority crossing");
    w.virtualized.insert(chosen);
    work = virtualize(work, {chosen});
  }

  // Linking-number elimination: per pair, change the crossings of the
  // majority sign whose over endpoint lies on the pair's first component.
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      long dlk = doubled_linking_number(extract_pair(work, i, j));
      if (dlk == 0) continue;
      if (dlk % 2 != 0) throw PreconditionViolated("odd doubled linking number");
      int want_sign = dlk > 0 ? +1 : -1;
      long need = (dlk > 0 ? dlk : -dlk) / 2;
      std::vector<std::pair<bool, int>> candidates; // (under-on-first, id): over-on-first first
      for (const auto& [id, c] : work.crossings()) {
        if (c.is_self() || c.sign != want_sign) continue;
        int a = c.over.component, b = c.under.component;
        if (std::minmax(a, b) != std::minmax(i, j)) continue;
        candidates.emplace_back(a != i, id);
      }
      std::sort(candidates.begin(), candidates.end());
      if (static_cast<long>(candidates.size()) < need)
        throw PreconditionViolated("not enough majority-sign crossings");
      std::set<int> t;
      for (long x = 0; x < need; ++x) t.insert(candidates[x].second);
      w.changed.insert(t.begin(), t.end());
      work = change_crossings(work, t);
    }
  return w;
}

namespace {

std::string subset_str(const std::set<int>& labels) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int l : labels) {
    if (!first) out << ",";
    out << l;
    first = false;
  }
  out << "}";
  return out.str();
}

} // namespace

FamilyReport verify_family(const std::vector<int>& p, long max_subsets, const MoveBudget& b,
                           const SearchCaps& caps) {
  LabeledPretzel lp = pretzel(p);
  int total = lp.total_labels();
  if (total > 30 || (1L << total) > max_subsets)
    throw TooLarge("subset space exceeds the cap");

  int n_strands = static_cast<int>(p.size());
  bool odd_family = all_odd(p);
  FamilyReport report;
  report.params = p;

  for (long mask = 0; mask < (1L << total); ++mask) {
    std::set<int> labels;
    for (int label = 1; label <= total; ++label)
      if (mask & (1L << (label - 1))) labels.insert(label);
    int k = static_cast<int>(labels.size());
    int k1 = static_cast<int>(std::count_if(labels.begin(), labels.end(),
                                            [](int l) { return l % 2 == 0; }));

    UnknottingIndex formula;
    if (n_strands == 2) {
      formula = cor33_index(p[0], p[1], k, k1);
    } else if (odd_family) {
      formula = thm31_index(p, k, k1);
    } else {
      std::vector<int> k_even(n_strands, 0), k_odd(n_strands, 0);
      for (int label : labels) {
        int s = lp.strand_of_label.at(label) - 1;
        (label % 2 == 0 ? k_even[s] : k_odd[s])++;
      }
      formula = thm32_index(p, k_even, k_odd);
    }

    Diagram dv = virtualize_labels(lp, labels);
    ++report.subsets_checked;
    auto fail = [&](const std::string& what) {
      report.discrepancies.push_back("subset " + subset_str(labels) + ": " + what);
    };

    int span = total_span(dv);
    if (span != formula.m)
      fail("span " + std::to_string(span) + " != formula m " + std::to_string(formula.m));
    UnknottingIndex lb = lower_bound(dv);
    if (!(lb == formula))
      fail("lower bound (" + std::to_string(lb.m) + "," + lb.n.str() + ") != formula (" +
           std::to_string(formula.m) + "," + formula.n.str() + ")");

    ProofWitness pw = proof_witness(dv);
    if (static_cast<int>(pw.virtualized.size()) != formula.m)
      fail("witness virtualizes " + std::to_string(pw.virtualized.size()) +
           " crossings, formula m = " + std::to_string(formula.m));
    if (static_cast<long>(pw.changed.size()) * 2 != formula.n.doubled())
      fail("witness changes " + std::to_string(pw.changed.size()) + " crossings, formula n = " +
           formula.n.str());
    Diagram replayed = change_crossings(virtualize(dv, pw.virtualized), pw.changed);
    if (!simplify(replayed, b).diagram.empty()) fail("witness does not replay to a trivial link");

    if (dv.crossing_count() <= caps.max_crossings) {
      SearchResult res = unknotting_index(dv, b, caps);
      ++report.searched;
      if (res.kind != SearchResult::Kind::Exact)
        fail("search did not certify an exact value");
      else if (!(res.value == formula))
        fail("search Exact (" + std::to_string(res.value.m) + "," + res.value.n.str() +
             ") != formula (" + std::to_string(formula.m) + "," + formula.n.str() + ")");
    }
  }
  return report;
}

} // namespace vlink
