#include "vlink/search.hpp"

#include <algorithm>
#include <map>

#include "vlink/invariants.hpp"

namespace vlink {

namespace {

// Lexicographic k-combinations of ids (assumed sorted). f returns true to
// stop early.
template <typename F>
bool for_each_combination(const std::vector<int>& ids, int k, F&& f) {
  int n = static_cast<int>(ids.size());
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> combo(k);
  for (;;) {
    for (int i = 0; i < k; ++i) combo[i] = ids[idx[i]];
    if (f(combo)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> sorted_linking_ids(const Diagram& d, int cap) {
  std::vector<int> ids = d.linking_crossing_ids();
  if (static_cast<int>(ids.size()) > cap)
    throw TooLarge("too many linking crossings: " + std::to_string(ids.size()) + " > cap " +
                   std::to_string(cap));
  return ids; // linking_crossing_ids iterates an ordered map: already sorted
}

} // namespace

std::vector<std::set<int>> lambda_sets(const Diagram& d, const SearchCaps& caps) {
  std::vector<int> ids = sorted_linking_ids(d, caps.max_linking);
  int span = total_span(d);
  std::vector<std::set<int>> out;
  for_each_combination(ids, span, [&](const std::vector<int>& combo) {
    std::set<int> s(combo.begin(), combo.end());
    if (total_span(virtualize(d, s)) == 0) out.push_back(std::move(s));
    return false;
  });
  return out;
}

HalfInteger ell_bruteforce(const Diagram& d, const SearchCaps& caps) {
  std::optional<long> best;
  for (const std::set<int>& s : lambda_sets(d, caps)) {
    long dlk = doubled_linking_number(virtualize(d, s));
    if (dlk < 0) dlk = -dlk;
    if (!best || dlk < *best) best = dlk;
  }
  if (!best) throw PreconditionViolated("no span-killing set found"); // unreachable by Lemma 2.2
  return HalfInteger::from_doubled(*best);
}

int min_virtualizations_to_zero_span(const Diagram& d, const SearchCaps& caps) {
  std::vector<int> ids = sorted_linking_ids(d, caps.max_linking);
  for (int size = 0; size <= static_cast<int>(ids.size()); ++size) {
    bool found = for_each_combination(ids, size, [&](const std::vector<int>& combo) {
      return total_span(virtualize(d, std::set<int>(combo.begin(), combo.end()))) == 0;
    });
    if (found) return size;
  }
  throw PreconditionViolated("no span-killing set found"); // unreachable
}

namespace {

struct ViableS {
  std::set<int> ids;
  Diagram after; // virtualize(d, ids); zero span
  int min_changes = 0; // sum over pairs of |doubled lk| / 2
};

// Minimum crossing changes any T must contain to zero out every pair's
// linking number; -1 when impossible (odd doubled lk on some pair).
int min_changes_needed(const Diagram& d) {
  int n = d.component_count();
  long total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long dlk = doubled_linking_number(extract_pair(d, i, j));
      if (dlk < 0) dlk = -dlk;
      if (dlk % 2 != 0) return -1;
      total += dlk / 2;
    }
  return static_cast<int>(total);
}

} // namespace

SearchResult unknotting_index(const Diagram& d, const MoveBudget& b, const SearchCaps& caps) {
  int c = d.crossing_count();
  if (c > caps.max_crossings)
    throw TooLarge("too many crossings: " + std::to_string(c) + " > cap " +
                   std::to_string(caps.max_crossings));

  SearchResult result;
  UnknottingIndex lb = lower_bound(d);
  result.lower = lb;
  std::vector<int> ids = d.crossing_ids();

  std::map<std::string, Verdict> memo;
  std::optional<UnknottingIndex> first_unknown;

  for (int m = lb.m; m <= c; ++m) {
    // Virtualization sets are shared across the n loop; keep only those that
    // kill the span (crossing changes cannot) and can reach zero linking
    // numbers with integrally many changes.
    std::vector<ViableS> viable;
    for_each_combination(ids, m, [&](const std::vector<int>& combo) {
      std::set<int> s(combo.begin(), combo.end());
      Diagram after = virtualize(d, s);
      if (total_span(after) != 0) return false;
      int need = min_changes_needed(after);
      if (need < 0) return false;
      viable.push_back(ViableS{std::move(s), std::move(after), need});
      return false;
    });

    long n_start = (m == lb.m) ? lb.n.ceil() : 0;
    for (int n = static_cast<int>(n_start); n <= c - m; ++n) {
      for (const ViableS& vs : viable) {
        if (vs.min_changes > n) continue;
        std::vector<int> rest;
        for (int id : ids)
          if (!vs.ids.count(id)) rest.push_back(id);
        std::optional<SearchResult> success;
        for_each_combination(rest, n, [&](const std::vector<int>& combo) {
          std::set<int> t(combo.begin(), combo.end());
          Diagram candidate = change_crossings(vs.after, t);
          std::string key = serialize(candidate);
          auto seen = memo.find(key);
          if (seen != memo.end()) return false; // dedup: verdict already accounted for
          TrivialityVerdict v = is_trivial(candidate, b);
          memo.emplace(std::move(key), v.kind);
          ++result.stats.candidates;
          if (v.kind == Verdict::Unknown) {
            ++result.stats.unknowns;
            if (!first_unknown) first_unknown = UnknottingIndex::of_ints(m, n);
            return false;
          }
          if (v.kind == Verdict::Trivial) {
            SearchResult r;
            r.value = UnknottingIndex::of_ints(m, n);
            r.witness = SearchWitness{vs.ids, t, v.trace};
            success = std::move(r);
            return true;
          }
          return false;
        });
        if (success) {
          success->stats = result.stats;
          success->lower = lb;
          UnknottingIndex here = UnknottingIndex::of_ints(m, n);
          if (first_unknown && compare_dict(*first_unknown, here) == Ordering::Less) {
            success->kind = SearchResult::Kind::Interval;
            success->lower = *first_unknown;
            success->reason = "budget-limited verdicts below the first certified tuple";
          } else {
            success->kind = SearchResult::Kind::Exact;
          }
          return *success;
        }
      }
    }
  }
  // Unreachable: virtualizing every crossing always certifies (c, 0).
  throw PreconditionViolated("search failed to terminate with a certified tuple");
}

} // namespace vlink
