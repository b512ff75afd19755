#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

// Caps for the bounded move search. Exhausting a cap can only produce an
// Unknown verdict, never a wrong one.
struct MoveBudget {
  int max_states = 100000;
  int max_depth = 64;
  bool enable_r3 = false;
  bool enable_r2_insertion = false;
};

struct MoveRecord {
  std::string move; // "r1", "r2", "r3", "r2i"
  std::vector<int> crossings;
  // Placement data needed to replay the step. Empty for r1/r2 (deletions are
  // determined by the ids); for r3 the three (component, position) arc starts;
  // for r2i (comp1, gap1, comp2, gap2, sign).
  std::vector<int> positions;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};
using MoveTrace = std::vector<MoveRecord>;

// Virtualization: delete the chords in S; virtual_count, when tracked, grows
// by |S|.
Diagram virtualize(const Diagram& d, const std::set<int>& ids);

// Crossing change: swap over/under roles and negate the sign of each crossing
// in T.
Diagram change_crossings(const Diagram& d, const std::set<int>& ids);

struct SimplifyResult {
  Diagram diagram;
  MoveTrace trace; // replays from the input to `diagram`
  bool budget_exhausted = false;
};

// Reduces d by R1/R2 chord deletions (greedy, then a budgeted search over
// deletion orders). With enable_r3 / enable_r2_insertion the search also
// explores R3 reconfigurations and R2 chord-pair insertions, breadth-first
// within the budget. Returns the fewest-crossing diagram found, ties broken
// by lexicographically least serialization.
SimplifyResult simplify(const Diagram& d, const MoveBudget& b = {});

enum class Verdict { Trivial, NonTrivial, Unknown };

struct TrivialityVerdict {
  Verdict kind = Verdict::Unknown;
  MoveTrace trace;         // Trivial: replays to a crossing-free diagram
  std::string certificate; // NonTrivial: which invariant is nonzero
};

TrivialityVerdict is_trivial(const Diagram& d, const MoveBudget& b = {});

// Applies k random inverse-R1 / inverse-R2 moves, deterministically from
// seed. The result is equivalent to d as a virtual link.
Diagram random_inflate(const Diagram& d, int k, std::uint64_t seed);

// Replays a trace produced by simplify; used to validate witnesses.
Diagram replay_trace(const Diagram& d, const MoveTrace& trace);

} // namespace vlink
