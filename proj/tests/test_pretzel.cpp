#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/pretzel.hpp"
#include "vlink/search.hpp"

using namespace vlink;

namespace {

std::set<int> random_label_subset(std::mt19937_64& rng, int total) {
  std::set<int> labels;
  for (int l = 1; l <= total; ++l)
    if (rng() % 2 == 0) labels.insert(l);
  return labels;
}

int even_count(const std::set<int>& labels) {
  int k1 = 0;
  for (int l : labels) k1 += (l % 2 == 0);
  return k1;
}

} // namespace

TEST_CASE("pretzel generator examples") {
  LabeledPretzel hopf = pretzel({1, 1});
  CHECK(hopf.diagram.component_count() == 2);
  CHECK(hopf.diagram.crossing_count() == 2);
  CHECK(hopf.diagram.linking_crossing_ids().size() == 2);
  CHECK(std::abs(doubled_linking_number(hopf.diagram)) == 2);
  CHECK(hopf.diagram.virtual_count() == 0);

  LabeledPretzel t22 = pretzel({2, 2});
  CHECK(t22.diagram.component_count() == 2);
  CHECK(total_span(t22.diagram) == 0);
  CHECK(std::abs(doubled_linking_number(t22.diagram)) == 4);

  LabeledPretzel big = pretzel({7, 5, 9, 11});
  CHECK(big.diagram.component_count() == 2);
  CHECK(big.diagram.crossing_count() == 32);
  CHECK(total_span(big.diagram) == 0);

  LabeledPretzel block = pretzel({2, 2, 2, 2});
  CHECK(block.diagram.component_count() == 4);
  CHECK(block.diagram.crossing_count() == 8);
  CHECK(total_span(block.diagram) == 0);
}

TEST_CASE("pretzel rejects unsupported parameters") {
  CHECK_THROWS_AS(pretzel({}), EmptyParams);
  CHECK_THROWS_AS(pretzel({0, 2}), PreconditionViolated);
  CHECK_THROWS_AS(pretzel({-1, 1}), PreconditionViolated);
  CHECK_THROWS_AS(pretzel({1, 2}), PreconditionViolated);      // mixed parity, odd sum
  CHECK_THROWS_AS(pretzel({1, 1, 1}), PreconditionViolated);   // odd strand count
  CHECK_THROWS_AS(pretzel({2, 2, 2}), PreconditionViolated);   // odd strand count
  CHECK_THROWS_AS(pretzel({1, 3, 2, 2}), PreconditionViolated); // mixed parities, n=4
  CHECK_NOTHROW(pretzel({1, 3})); // n = 2, even sum
}

TEST_CASE("strand_labels examples") {
  CHECK(strand_labels({3, 2}, 2) == std::pair<int, int>{4, 5});
  CHECK(strand_labels({7, 5, 9, 11}, 3) == std::pair<int, int>{13, 21});
  CHECK(strand_labels({6}, 1) == std::pair<int, int>{1, 6});
  CHECK_THROWS_AS(strand_labels({3, 2}, 0), IndexOutOfRange);
  CHECK_THROWS_AS(strand_labels({3, 2}, 3), IndexOutOfRange);

  LabeledPretzel lp = pretzel({7, 5, 9, 11});
  for (int label = 13; label <= 21; ++label) CHECK(lp.strand_of_label.at(label) == 3);
}

TEST_CASE("virtualize_labels examples") {
  LabeledPretzel hopf = pretzel({1, 1});
  Diagram v = virtualize_labels(hopf, {1});
  CHECK(v.crossing_count() == 1);
  CHECK(total_span(v) == 1);
  CHECK(v.virtual_count() == 1);

  Diagram unchanged = virtualize_labels(hopf, {});
  CHECK(unchanged.crossing_count() == 2);
  CHECK(unchanged.virtual_count() == 0);

  CHECK_THROWS_AS(virtualize_labels(hopf, {3}), UnknownLabel);

  // Worked example: 13 labels of which 10 even leave span 7.
  LabeledPretzel big = pretzel({7, 5, 9, 11});
  std::set<int> labels{2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 1, 3, 5};
  Diagram dv = virtualize_labels(big, labels);
  CHECK(dv.virtual_count() == 13);
  CHECK(total_span(dv) == 7);
}

TEST_CASE("thm31_index examples") {
  CHECK(thm31_index({7, 5, 9, 11}, 13, 10) == UnknottingIndex::of_ints(7, 6));
  CHECK(thm31_index({1, 1}, 0, 0) == UnknottingIndex::of_ints(0, 1));
  CHECK(thm31_index({3, 3}, 2, 1) == UnknottingIndex::of_ints(0, 2));
  CHECK_THROWS_AS(thm31_index({2, 2}, 0, 0), PreconditionViolated);
  CHECK_THROWS_AS(thm31_index({1, 1, 1}, 0, 0), PreconditionViolated);
  CHECK_THROWS_AS(thm31_index({1, 1}, 3, 0), PreconditionViolated);
  CHECK_THROWS_AS(thm31_index({1, 1}, 1, 2), PreconditionViolated);
}

TEST_CASE("thm32_index examples") {
  CHECK(thm32_index({2, 2}, {0, 0}, {0, 0}) == UnknottingIndex::of_ints(0, 2));
  CHECK(thm32_index({2, 2}, {1, 0}, {0, 0}) == UnknottingIndex::of_ints(1, 1));
  CHECK(thm32_index({4, 2}, {0, 0}, {0, 0}) == UnknottingIndex::of_ints(0, 3));
  CHECK(thm32_index({2, 2, 2, 2}, {1, 0, 0, 0}, {0, 1, 0, 0}) == UnknottingIndex::of_ints(2, 2));
  CHECK_THROWS_AS(thm32_index({1, 1}, {0, 0}, {0, 0}), PreconditionViolated);
  CHECK_THROWS_AS(thm32_index({2, 2}, {0}, {0, 0}), PreconditionViolated);
  CHECK_THROWS_AS(thm32_index({2, 2}, {2, 0}, {0, 0}), PreconditionViolated);
}

TEST_CASE("cor33_index examples") {
  CHECK(cor33_index(1, 1, 0, 0) == UnknottingIndex::of_ints(0, 1));
  CHECK(cor33_index(2, 2, 0, 0) == UnknottingIndex::of_ints(0, 2));
  CHECK(cor33_index(7, 5, 3, 0) == UnknottingIndex::of_ints(3, 3));
  CHECK_THROWS_AS(cor33_index(1, 2, 0, 0), PreconditionViolated);
  CHECK_THROWS_AS(cor33_index(2, 2, 5, 0), PreconditionViolated);
}

TEST_CASE("cor33 agrees with thm31 on odd-odd parameters") {
  for (int p1 : {1, 3, 5, 7})
    for (int p2 : {1, 3, 5}) {
      int total = p1 + p2;
      for (int k = 0; k <= total; ++k)
        for (int k1 = 0; k1 <= k; ++k1) {
          if (k1 > total / 2 || k - k1 > total / 2) continue;
          CHECK(cor33_index(p1, p2, k, k1) == thm31_index({p1, p2}, k, k1));
          // Swapping the parity classes maps (k, k1) to (k, k - k1) and must
          // keep the first coordinate.
          CHECK(cor33_index(p1, p2, k, k - k1).m == cor33_index(p1, p2, k, k1).m);
        }
    }
}

TEST_CASE("calibration: serial family span and linking number") {
  std::mt19937_64 rng(31);
  for (auto& p : std::vector<std::vector<int>>{{1, 1}, {3, 5}, {1, 3, 5, 7}, {7, 5, 9, 11}}) {
    LabeledPretzel lp = pretzel(p);
    int total = lp.total_labels();
    for (int t = 0; t < 25; ++t) {
      std::set<int> labels = random_label_subset(rng, total);
      int k = static_cast<int>(labels.size());
      int k1 = even_count(labels);
      Diagram dv = virtualize_labels(lp, labels);
      CHECK(total_span(dv) == std::abs(k - 2 * k1));
      CHECK(std::abs(doubled_linking_number(dv)) == total - k);
    }
  }
}

TEST_CASE("calibration: block family localizes pair spans to strands") {
  std::mt19937_64 rng(32);
  for (auto& p : std::vector<std::vector<int>>{{2, 2, 2, 2}, {2, 4, 2, 2}, {4, 2, 6, 2, 2, 2}}) {
    LabeledPretzel lp = pretzel(p);
    int n = static_cast<int>(p.size());
    int total = lp.total_labels();
    for (int t = 0; t < 20; ++t) {
      std::set<int> labels = random_label_subset(rng, total);
      std::vector<int> k_even(n, 0), k_odd(n, 0);
      for (int label : labels) {
        int s = lp.strand_of_label.at(label) - 1;
        (label % 2 == 0 ? k_even[s] : k_odd[s])++;
      }
      Diagram dv = virtualize_labels(lp, labels);
      int expected = 0;
      for (int i = 0; i < n; ++i) expected += std::abs(k_even[i] - k_odd[i]);
      CHECK(total_span(dv) == expected);
      // Non-adjacent component pairs share no crossings at all.
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
          if (!adjacent) CHECK(extract_pair(dv, i, j).empty());
        }
    }
  }
}

TEST_CASE("proof witness realizes the formula and trivializes") {
  std::mt19937_64 rng(33);
  LabeledPretzel lp = pretzel({7, 5, 9, 11});
  int total = lp.total_labels();
  for (int t = 0; t < 10; ++t) {
    std::set<int> labels = random_label_subset(rng, total);
    int k = static_cast<int>(labels.size());
    int k1 = even_count(labels);
    Diagram dv = virtualize_labels(lp, labels);
    UnknottingIndex formula = thm31_index({7, 5, 9, 11}, k, k1);
    CHECK(lower_bound(dv) == formula);
    ProofWitness w = proof_witness(dv);
    CHECK(static_cast<int>(w.virtualized.size()) == formula.m);
    CHECK(static_cast<long>(w.changed.size()) * 2 == formula.n.doubled());
    Diagram modified = change_crossings(virtualize(dv, w.virtualized), w.changed);
    CHECK(simplify(modified).diagram.empty());
  }
}

TEST_CASE("verify_family: exhaustive small families pass") {
  for (auto& p : std::vector<std::vector<int>>{{1, 1}, {1, 3}, {2, 2}}) {
    FamilyReport r = verify_family(p, 1L << 6);
    CHECK(r.ok());
    CHECK(r.subsets_checked == (1L << (p[0] + p[1])));
    CHECK(r.searched == r.subsets_checked);
    CHECK(r.params == p);
  }
  CHECK_THROWS_AS(verify_family({7, 5, 9, 11}, 1024), TooLarge);
}
