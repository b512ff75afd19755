#include "vlink/moves.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <unordered_set>

#include "vlink/invariants.hpp"

namespace vlink {

namespace {

Diagram remove_chords(const Diagram& d, const std::set<int>& ids, std::optional<int> vc) {
  std::vector<std::vector<CodeEntry>> comps;
  comps.reserve(d.component_count());
  for (const auto& comp : d.components()) {
    std::vector<CodeEntry> seq;
    for (const CodeEntry& e : comp)
      if (!ids.count(e.crossing_id)) seq.push_back(e);
    comps.push_back(std::move(seq));
  }
  std::map<int, int> signs = d.signs();
  for (int id : ids) signs.erase(id);
  return Diagram(std::move(comps), std::move(signs), vc);
}

// a immediately followed by b along the orientation of their (shared)
// component.
bool follows(const Diagram& d, const Endpoint& a, const Endpoint& b) {
  if (a.component != b.component) return false;
  int len = static_cast<int>(d.component(a.component).size());
  return len >= 2 && (a.position + 1) % len == b.position;
}

bool adjacent(const Diagram& d, const Endpoint& a, const Endpoint& b) {
  return follows(d, a, b) || follows(d, b, a);
}

std::vector<int> r1_candidates(const Diagram& d) {
  std::vector<int> out;
  for (const auto& [id, c] : d.crossings())
    if (c.is_self() && adjacent(d, c.over, c.under)) out.push_back(id);
  return out;
}

std::vector<std::pair<int, int>> r2_candidates(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (auto i = d.crossings().begin(); i != d.crossings().end(); ++i)
    for (auto j = std::next(i); j != d.crossings().end(); ++j) {
      const Crossing& a = i->second;
      const Crossing& b = j->second;
      if (a.sign == b.sign) continue;
      if (!adjacent(d, a.over, b.over)) continue;
      if (!adjacent(d, a.under, b.under)) continue;
      out.emplace_back(a.id, b.id);
    }
  return out;
}

// A pair of cyclically consecutive endpoints belonging to two different
// chords: one candidate strand segment of an R3 triangle.
struct Arc {
  int comp = 0;
  int pos = 0; // position of the first endpoint; second is (pos+1) % len
  CodeEntry first, second;
};

bool arcs_overlap(const Arc& a, const Arc& b, const Diagram& d) {
  if (a.comp != b.comp) return false;
  int len = static_cast<int>(d.component(a.comp).size());
  auto spots = [&](const Arc& x) { return std::pair{x.pos, (x.pos + 1) % len}; };
  auto [a1, a2] = spots(a);
  auto [b1, b2] = spots(b);
  return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
}

struct R3Move {
  std::array<int, 3> ids;  // sorted crossing ids
  std::array<Arc, 3> arcs; // top, middle, bottom
};

// Checks whether three mutually adjacent strand segments form a geometrically
// realizable triangle. With the top segment passing over both others and the
// middle over the bottom, picking traversal directions e_T, e_M, e_B for the
// segments fixes both the meeting orders along each segment and the three
// crossing signs; a configuration is a genuine triangle iff its orders and
// signs are consistent with some choice of directions, in one of the two
// mirror-image layouts.
bool r3_consistent(const Diagram& d, const Arc& top, const Arc& mid, const Arc& bot, int x, int y,
                   int z) {
  // x = top/mid chord, y = top/bottom, z = mid/bottom.
  int et = (top.first.crossing_id == x) ? +1 : -1; // top order (x,y) <=> e_T = +
  int eb = (bot.first.crossing_id == z) ? +1 : -1; // bottom order (z,y) <=> e_B = +
  int sx = d.crossing(x).sign, sy = d.crossing(y).sign, sz = d.crossing(z).sign;
  {
    int em = (mid.first.crossing_id == z) ? +1 : -1; // layout 1: order (z,x) <=> e_M = +
    if (sx == et * em && sy == et * eb && sz == -em * eb) return true;
  }
  {
    int em = (mid.first.crossing_id == x) ? +1 : -1; // mirror layout: order (x,z) <=> e_M = +
    if (sx == et * em && sy == -et * eb && sz == -em * eb) return true;
  }
  return false;
}

std::vector<R3Move> r3_moves(const Diagram& d) {
  // All candidate segments, grouped by the chord pair they touch.
  std::map<std::pair<int, int>, std::vector<Arc>> segs;
  for (int ci = 0; ci < d.component_count(); ++ci) {
    const auto& comp = d.component(ci);
    int len = static_cast<int>(comp.size());
    if (len < 2) continue;
    for (int p = 0; p < len; ++p) {
      CodeEntry a = comp[p], b = comp[(p + 1) % len];
      if (a.crossing_id == b.crossing_id) continue;
      auto key = std::minmax(a.crossing_id, b.crossing_id);
      segs[{key.first, key.second}].push_back(Arc{ci, p, a, b});
    }
  }

  std::vector<R3Move> out;
  for (const auto& [ab, arcs_ab] : segs) {
    auto [a, b] = ab;
    for (const auto& [cd, arcs_cd] : segs) {
      if (cd.first != a || cd.second <= b) continue;
      int c = cd.second;
      auto bc = segs.find({b, c});
      if (bc == segs.end()) continue;
      for (const Arc& s1 : arcs_ab)
        for (const Arc& s2 : arcs_cd)
          for (const Arc& s3 : bc->second) {
            if (arcs_overlap(s1, s2, d) || arcs_overlap(s1, s3, d) || arcs_overlap(s2, s3, d))
              continue;
            std::array<Arc, 3> arcs{s1, s2, s3};
            auto overs = [](const Arc& s) {
              return (s.first.role == Role::Over) + (s.second.role == Role::Over);
            };
            std::sort(arcs.begin(), arcs.end(),
                      [&](const Arc& l, const Arc& r) { return overs(l) > overs(r); });
            if (overs(arcs[0]) != 2 || overs(arcs[1]) != 1 || overs(arcs[2]) != 0) continue;
            const Arc& top = arcs[0];
            const Arc& mid = arcs[1];
            const Arc& bot = arcs[2];
            // x over on top / under on mid, y over on top / under on bottom,
            // z over on mid / under on bottom.
            int z = (mid.first.role == Role::Over) ? mid.first.crossing_id
                                                   : mid.second.crossing_id;
            int x = (mid.first.role == Role::Over) ? mid.second.crossing_id
                                                   : mid.first.crossing_id;
            if (top.first.crossing_id != x && top.second.crossing_id != x) continue;
            int y = (top.first.crossing_id == x) ? top.second.crossing_id : top.first.crossing_id;
            bool bottom_ok = (bot.first.crossing_id == y && bot.second.crossing_id == z) ||
                             (bot.first.crossing_id == z && bot.second.crossing_id == y);
            if (!bottom_ok) continue;
            if (!r3_consistent(d, top, mid, bot, x, y, z)) continue;
            std::array<int, 3> ids{x, y, z};
            std::sort(ids.begin(), ids.end());
            out.push_back(R3Move{ids, {top, mid, bot}});
          }
    }
  }
  return out;
}

Diagram apply_r3(const Diagram& d, const R3Move& m) {
  std::vector<std::vector<CodeEntry>> comps = d.components();
  for (const Arc& s : m.arcs) {
    auto& comp = comps[s.comp];
    int len = static_cast<int>(comp.size());
    std::swap(comp[s.pos], comp[(s.pos + 1) % len]);
  }
  return Diagram(std::move(comps), d.signs(), d.virtual_count());
}

struct R2Insertion {
  int comp1 = 0, gap1 = 0; // over pair goes here
  int comp2 = 0, gap2 = 0; // under pair goes here
  int sign = +1;           // sign of the first inserted chord
};

Diagram apply_r2_insertion(const Diagram& d, const R2Insertion& ins, int& id1, int& id2) {
  int max_id = 0;
  for (const auto& [id, c] : d.crossings()) max_id = std::max(max_id, id);
  id1 = max_id + 1;
  id2 = max_id + 2;
  std::vector<std::vector<CodeEntry>> comps = d.components();
  std::vector<CodeEntry> overs{{id1, Role::Over}, {id2, Role::Over}};
  std::vector<CodeEntry> unders{{id2, Role::Under}, {id1, Role::Under}};
  // Insert at the later gap first so the earlier gap index stays valid; at a
  // shared gap the under pair goes in first, yielding O O U U (a poke).
  auto insert_at = [&](int comp, int gap, const std::vector<CodeEntry>& pair) {
    auto& seq = comps[comp];
    seq.insert(seq.begin() + gap, pair.begin(), pair.end());
  };
  if (ins.comp1 == ins.comp2 && ins.gap1 <= ins.gap2) {
    insert_at(ins.comp2, ins.gap2, unders);
    insert_at(ins.comp1, ins.gap1, overs);
  } else if (ins.comp1 == ins.comp2) {
    insert_at(ins.comp1, ins.gap1, overs);
    insert_at(ins.comp2, ins.gap2, unders);
  } else {
    insert_at(ins.comp1, ins.gap1, overs);
    insert_at(ins.comp2, ins.gap2, unders);
  }
  std::map<int, int> signs = d.signs();
  signs[id1] = ins.sign;
  signs[id2] = -ins.sign;
  return Diagram(std::move(comps), std::move(signs), d.virtual_count());
}

struct State {
  Diagram diagram;
  MoveTrace trace;
};

void expand(const State& s, const MoveBudget& b, std::deque<State>& queue,
            std::unordered_set<std::string>& visited) {
  auto push = [&](Diagram child, MoveRecord rec) {
    std::string key = serialize(child);
    if (!visited.insert(key).second) return;
    MoveTrace t = s.trace;
    t.push_back(std::move(rec));
    queue.push_back(State{std::move(child), std::move(t)});
  };
  for (int id : r1_candidates(s.diagram))
    push(remove_chords(s.diagram, {id}, s.diagram.virtual_count()), MoveRecord{"r1", {id}, {}});
  for (auto [a, c] : r2_candidates(s.diagram))
    push(remove_chords(s.diagram, {a, c}, s.diagram.virtual_count()), MoveRecord{"r2", {a, c}, {}});
  if (b.enable_r3) {
    for (const R3Move& m : r3_moves(s.diagram)) {
      std::vector<int> pos;
      for (const Arc& arc : m.arcs) {
        pos.push_back(arc.comp);
        pos.push_back(arc.pos);
      }
      push(apply_r3(s.diagram, m),
           MoveRecord{"r3", {m.ids.begin(), m.ids.end()}, std::move(pos)});
    }
  }
  if (b.enable_r2_insertion) {
    int nc = s.diagram.component_count();
    for (int c1 = 0; c1 < nc; ++c1)
      for (int g1 = 0; g1 <= static_cast<int>(s.diagram.component(c1).size()); ++g1)
        for (int c2 = 0; c2 < nc; ++c2)
          for (int g2 = 0; g2 <= static_cast<int>(s.diagram.component(c2).size()); ++g2)
            for (int sign : {+1, -1}) {
              int id1 = 0, id2 = 0;
              Diagram child =
                  apply_r2_insertion(s.diagram, R2Insertion{c1, g1, c2, g2, sign}, id1, id2);
              push(std::move(child), MoveRecord{"r2i", {id1, id2}, {c1, g1, c2, g2, sign}});
            }
  }
}

bool better(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count()) return a.crossing_count() < b.crossing_count();
  return serialize(a) < serialize(b);
}

SimplifyResult greedy_reduce(const Diagram& d) {
  SimplifyResult res{d, {}, false};
  for (;;) {
    auto r1 = r1_candidates(res.diagram);
    if (!r1.empty()) {
      res.trace.push_back(MoveRecord{"r1", {r1.front()}, {}});
      res.diagram = remove_chords(res.diagram, {r1.front()}, res.diagram.virtual_count());
      continue;
    }
    auto r2 = r2_candidates(res.diagram);
    if (!r2.empty()) {
      auto [a, b] = r2.front();
      res.trace.push_back(MoveRecord{"r2", {a, b}, {}});
      res.diagram = remove_chords(res.diagram, {a, b}, res.diagram.virtual_count());
      continue;
    }
    return res;
  }
}

} // namespace

Diagram virtualize(const Diagram& d, const std::set<int>& ids) {
  for (int id : ids) d.crossing(id); // throws UnknownCrossing
  std::optional<int> vc = d.virtual_count();
  if (vc) vc = *vc + static_cast<int>(ids.size());
  return remove_chords(d, ids, vc);
}

Diagram change_crossings(const Diagram& d, const std::set<int>& ids) {
  for (int id : ids) d.crossing(id);
  std::vector<std::vector<CodeEntry>> comps = d.components();
  for (auto& comp : comps)
    for (CodeEntry& e : comp)
      if (ids.count(e.crossing_id)) e.role = opposite(e.role);
  std::map<int, int> signs = d.signs();
  for (int id : ids) signs[id] = -signs[id];
  return Diagram(std::move(comps), std::move(signs), d.virtual_count());
}

SimplifyResult simplify(const Diagram& d, const MoveBudget& b) {
  SimplifyResult greedy = greedy_reduce(d);
  if (greedy.diagram.empty()) return greedy;

  // Greedy can pick a deletion order that strands removable chords, so explore
  // alternative orders (and R3 / R2 insertions when enabled) breadth-first.
  std::deque<State> queue;
  std::unordered_set<std::string> visited;
  visited.insert(serialize(d));
  queue.push_back(State{d, {}});

  SimplifyResult best = greedy;
  bool exhausted = false;
  int explored = 0;
  while (!queue.empty()) {
    if (explored >= b.max_states) {
      exhausted = true;
      break;
    }
    State s = std::move(queue.front());
    queue.pop_front();
    ++explored;
    if (better(s.diagram, best.diagram)) {
      best.diagram = s.diagram;
      best.trace = s.trace;
    }
    if (s.diagram.empty()) break;
    if (static_cast<int>(s.trace.size()) >= b.max_depth) {
      exhausted = true;
      continue;
    }
    expand(s, b, queue, visited);
  }
  best.budget_exhausted = exhausted && !best.diagram.empty();
  return best;
}

TrivialityVerdict is_trivial(const Diagram& d, const MoveBudget& b) {
  int span = total_span(d);
  if (span != 0)
    return {Verdict::NonTrivial, {}, "total_span = " + std::to_string(span)};
  int n = d.component_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long dlk = doubled_linking_number(extract_pair(d, i, j));
      if (dlk != 0)
        return {Verdict::NonTrivial,
                {},
                "doubled_lk(" + std::to_string(i) + "," + std::to_string(j) +
                    ") = " + std::to_string(dlk)};
    }
  for (int i = 0; i < n; ++i) {
    WritheSpectrum j = nth_writhes(extract_component_knot(d, i));
    if (!j.empty())
      return {Verdict::NonTrivial, {}, "J(component " + std::to_string(i) + ") != 0"};
  }
  SimplifyResult simplified = simplify(d, b);
  if (simplified.diagram.empty()) return {Verdict::Trivial, simplified.trace, ""};
  return {Verdict::Unknown, {}, ""};
}

Diagram random_inflate(const Diagram& d, int k, std::uint64_t seed) {
  if (k < 0) throw PreconditionViolated("move count must be non-negative");
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  Diagram cur = d;
  for (int step = 0; step < k; ++step) {
    int max_id = 0;
    for (const auto& [id, c] : cur.crossings()) max_id = std::max(max_id, id);
    int nc = cur.component_count();
    // On a crossing-free diagram only a kink can anchor to existing structure.
    bool kink = cur.empty() || pick(2) == 0;
    if (kink) {
      int comp = pick(nc);
      int len = static_cast<int>(cur.component(comp).size());
      int gap = pick(len + 1);
      int sign = pick(2) == 0 ? +1 : -1;
      bool over_first = pick(2) == 0;
      std::vector<std::vector<CodeEntry>> comps = cur.components();
      std::vector<CodeEntry> pair{{max_id + 1, over_first ? Role::Over : Role::Under},
                                  {max_id + 1, over_first ? Role::Under : Role::Over}};
      comps[comp].insert(comps[comp].begin() + gap, pair.begin(), pair.end());
      std::map<int, int> signs = cur.signs();
      signs[max_id + 1] = sign;
      cur = Diagram(std::move(comps), std::move(signs), cur.virtual_count());
    } else {
      R2Insertion ins;
      ins.comp1 = pick(nc);
      ins.gap1 = pick(static_cast<int>(cur.component(ins.comp1).size()) + 1);
      ins.comp2 = pick(nc);
      ins.gap2 = pick(static_cast<int>(cur.component(ins.comp2).size()) + 1);
      ins.sign = pick(2) == 0 ? +1 : -1;
      int id1 = 0, id2 = 0;
      cur = apply_r2_insertion(cur, ins, id1, id2);
    }
  }
  return cur;
}

Diagram replay_trace(const Diagram& d, const MoveTrace& trace) {
  Diagram cur = d;
  for (const MoveRecord& rec : trace) {
    if (rec.move == "r1" || rec.move == "r2") {
      std::set<int> ids(rec.crossings.begin(), rec.crossings.end());
      for (int id : ids) cur.crossing(id);
      cur = remove_chords(cur, ids, cur.virtual_count());
    } else if (rec.move == "r3") {
      if (rec.positions.size() != 6) throw PreconditionViolated("malformed r3 record");
      std::vector<std::vector<CodeEntry>> comps = cur.components();
      for (int a = 0; a < 3; ++a) {
        int comp = rec.positions[2 * a];
        int pos = rec.positions[2 * a + 1];
        if (comp < 0 || comp >= static_cast<int>(comps.size()))
          throw PreconditionViolated("malformed r3 record");
        auto& seq = comps[comp];
        int len = static_cast<int>(seq.size());
        if (len < 2 || pos < 0 || pos >= len) throw PreconditionViolated("malformed r3 record");
        std::swap(seq[pos], seq[(pos + 1) % len]);
      }
      cur = Diagram(std::move(comps), cur.signs(), cur.virtual_count());
    } else if (rec.move == "r2i") {
      if (rec.positions.size() != 5) throw PreconditionViolated("malformed r2i record");
      R2Insertion ins{rec.positions[0], rec.positions[1], rec.positions[2], rec.positions[3],
                      rec.positions[4]};
      int id1 = 0, id2 = 0;
      cur = apply_r2_insertion(cur, ins, id1, id2);
    } else {
      throw PreconditionViolated("unknown move kind: " + rec.move);
    }
  }
  return cur;
}

} // namespace vlink
