#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "random_diagrams.hpp"
#include "vlink/bounds.hpp"
#include "vlink/diagram.hpp"
#include "vlink/moves.hpp"

using namespace vlink;

namespace {
const char* kVirtualHopf = "O1+ / U1+";
const char* kClassicalHopf = "O1+ U2+ / U1+ O2+";
const char* kVirtualTrefoil = "O1+ O2+ U1+ U2+";
const char* kClassicalTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
} // namespace

TEST_CASE("half-integer arithmetic") {
  HalfInteger h = HalfInteger::from_doubled(3);
  CHECK(h.str() == "1.5");
  CHECK(h.ceil() == 2);
  CHECK(HalfInteger::from_doubled(-1).str() == "-0.5");
  CHECK(HalfInteger::from_doubled(-1).ceil() == 0);
  CHECK(HalfInteger::from_doubled(-3).ceil() == -1);
  CHECK(HalfInteger::from_int(2).ceil() == 2);
  CHECK((HalfInteger::from_doubled(1) + HalfInteger::from_doubled(1)).is_integer());
  CHECK(HalfInteger::from_doubled(-5).abs() == HalfInteger::from_doubled(5));
}

TEST_CASE("compare_dict") {
  CHECK(compare_dict(UnknottingIndex::of_ints(0, 2), UnknottingIndex::of_ints(1, 0)) ==
        Ordering::Less);
  CHECK(compare_dict(UnknottingIndex::of_ints(1, 3), UnknottingIndex::of_ints(1, 5)) ==
        Ordering::Less);
  CHECK(compare_dict(UnknottingIndex::of_ints(2, 1), UnknottingIndex::of_ints(2, 1)) ==
        Ordering::Equal);
  CHECK(compare_dict(UnknottingIndex::of(0, HalfInteger::from_doubled(3)),
                     UnknottingIndex::of_ints(0, 1)) == Ordering::Greater);
}

TEST_CASE("lower_bound examples") {
  CHECK(lower_bound(parse_gauss_code(kClassicalHopf)) == UnknottingIndex::of_ints(0, 1));
  CHECK(lower_bound(parse_gauss_code(kVirtualHopf)) == UnknottingIndex::of_ints(1, 0));
  CHECK(lower_bound(parse_gauss_code(kVirtualTrefoil)) == UnknottingIndex::of_ints(0, 1));
  CHECK(lower_bound(Diagram::empty_link(2)) == UnknottingIndex::of_ints(0, 0));
}

TEST_CASE("knot_lower_bound examples") {
  KnotLowerBound vt = knot_lower_bound(parse_gauss_code(kVirtualTrefoil));
  CHECK_FALSE(vt.asymmetry.has_value()); // J_1 = J_-1 = 1
  CHECK(vt.spectral == UnknottingIndex::of_ints(0, 1));
  CHECK(vt.effective() == UnknottingIndex::of_ints(0, 1));

  KnotLowerBound ct = knot_lower_bound(parse_gauss_code(kClassicalTrefoil));
  CHECK_FALSE(ct.asymmetry.has_value());
  CHECK(ct.effective() == UnknottingIndex::of_ints(0, 0));

  CHECK(knot_lower_bound(Diagram()).effective() == UnknottingIndex::of_ints(0, 0));
  CHECK_THROWS_AS(knot_lower_bound(parse_gauss_code(kVirtualHopf)), NotAKnot);
}

TEST_CASE("knot_lower_bound asymmetry branch") {
  // A 3-chord knot whose writhe spectrum is asymmetric.
  Diagram asym = parse_gauss_code("O1+ O2+ O3+ U1+ U3+ U2+");
  WritheSpectrum ws = nth_writhes(asym);
  REQUIRE_FALSE(ws.symmetric());
  KnotLowerBound kb = knot_lower_bound(asym);
  REQUIRE(kb.asymmetry.has_value());
  CHECK(*kb.asymmetry == UnknottingIndex::of_ints(1, 0));

  std::mt19937_64 rng(17);
  bool found = false;
  for (int t = 0; t < 500 && !found; ++t) {
    Diagram d = testutil::random_diagram(rng, 1, 3 + static_cast<int>(rng() % 3), 0);
    WritheSpectrum w = nth_writhes(d);
    if (w.symmetric()) continue;
    found = true;
    KnotLowerBound b = knot_lower_bound(d);
    REQUIRE(b.asymmetry.has_value());
    CHECK(*b.asymmetry == UnknottingIndex::of_ints(1, 0));
    CHECK(compare_dict(b.effective(), b.spectral) != Ordering::Less);
    CHECK(compare_dict(b.effective(), *b.asymmetry) != Ordering::Less);
  }
  CHECK(found);
}

TEST_CASE("upper_bound examples") {
  Diagram vt = parse_gauss_code(kVirtualTrefoil);
  CHECK_FALSE(upper_bound(vt).has_value());
  CHECK(upper_bound(vt.with_virtual_count(1)) == UnknottingIndex::of_ints(1, 0));

  Diagram ch = parse_gauss_code(kClassicalHopf).with_virtual_count(0);
  CHECK(upper_bound(ch) == UnknottingIndex::of_ints(0, 1));
  CHECK(upper_bound(Diagram().with_virtual_count(0)) == UnknottingIndex::of_ints(0, 0));
}

TEST_CASE("knot_upper_bound examples") {
  Diagram vt = parse_gauss_code(kVirtualTrefoil);
  CHECK(knot_upper_bound(vt.with_virtual_count(1)) == UnknottingIndex::of_ints(0, 1));

  Diagram seven = parse_gauss_code(
      "O1+ U1+ O2+ U2+ O3+ U3+ O4+ U4+ O5+ U5+ O6+ U6+ O7+ U7+");
  CHECK(knot_upper_bound(seven.with_virtual_count(3)) == UnknottingIndex::of_ints(2, 3));

  CHECK_THROWS_AS(knot_upper_bound(vt.with_virtual_count(0)), NotApplicable);
  CHECK_THROWS_AS(knot_upper_bound(vt), MissingMetadata);
  CHECK_THROWS_AS(knot_upper_bound(parse_gauss_code(kVirtualHopf).with_virtual_count(1)),
                  NotAKnot);
}

TEST_CASE("bound_report structure") {
  BoundReport r = bound_report(parse_gauss_code(kVirtualHopf).with_virtual_count(1));
  CHECK(r.lower == UnknottingIndex::of_ints(1, 0));
  REQUIRE(r.upper.has_value());
  CHECK(*r.upper == UnknottingIndex::of_ints(1, 0));
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].i == 0);
  CHECK(r.pairs[0].j == 1);
  CHECK(r.pairs[0].span == 1);
  CHECK(r.pairs[0].doubled_lk == 1);
  CHECK(r.pairs[0].ell_doubled == 0);
  CHECK(r.component_writhes.size() == 2);
  CHECK(compare_dict(r.lower, *r.upper) != Ordering::Greater);
}

TEST_CASE("lower_bound is invariant under inflation") {
  std::mt19937_64 rng(1001);
  for (int t = 0; t < 100; ++t) {
    Diagram d = testutil::random_diagram(rng, 1 + static_cast<int>(rng() % 3),
                                         static_cast<int>(rng() % 4),
                                         static_cast<int>(rng() % 5));
    Diagram inflated = random_inflate(d, 1 + static_cast<int>(rng() % 5), rng());
    CHECK(lower_bound(inflated) == lower_bound(d));
  }
}

TEST_CASE("lower bound n-coordinate parity follows the writhe mass") {
  std::mt19937_64 rng(1002);
  for (int t = 0; t < 100; ++t) {
    Diagram d = testutil::random_diagram(rng, 1 + static_cast<int>(rng() % 3),
                                         static_cast<int>(rng() % 5),
                                         static_cast<int>(rng() % 5));
    long mass = 0;
    for (int i = 0; i < d.component_count(); ++i)
      mass += nth_writhes(extract_component_knot(d, i)).abs_sum();
    long doubled = lower_bound(d).n.doubled();
    CHECK((doubled - mass) % 2 == 0); // the pair-ell part is integral
    CHECK(doubled >= 0);
  }
}
