#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vlink/errors.hpp"

namespace vlink {

enum class Role : std::uint8_t { Over, Under };

inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

// One element of a component's cyclic endpoint sequence.
struct CodeEntry {
  int crossing_id = 0;
  Role role = Role::Over;

  friend bool operator==(const CodeEntry&, const CodeEntry&) = default;
};

// A resolved endpoint location inside a diagram.
struct Endpoint {
  int crossing_id = 0;
  Role role = Role::Over;
  int component = 0;
  int position = 0;
};

struct Crossing {
  int id = 0;
  int sign = +1; // +1 or -1
  Endpoint over;
  Endpoint under;

  bool is_self() const { return over.component == under.component; }
};

// Gauss diagram of an oriented multi-component virtual link. Immutable after
// construction; every operation returns a fresh value. Virtual crossings are
// quotiented out of the representation, surviving only as the optional
// virtual_count metadata.
class Diagram {
public:
  // Single empty component (an unknot diagram).
  Diagram() : components_(1) {}

  // Validates multiplicity and cross-references; throws BadMultiplicity or
  // SignMismatch (missing sign entry) on bad input.
  Diagram(std::vector<std::vector<CodeEntry>> components, std::map<int, int> signs,
          std::optional<int> virtual_count = std::nullopt);

  static Diagram empty_link(int n_components);

  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<CodeEntry>& component(int i) const;
  const std::vector<std::vector<CodeEntry>>& components() const { return components_; }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::map<int, Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int id) const; // throws UnknownCrossing
  bool has_crossing(int id) const { return crossings_.count(id) != 0; }

  std::optional<int> virtual_count() const { return virtual_count_; }
  Diagram with_virtual_count(std::optional<int> v) const;

  bool is_self_crossing(int id) const { return crossing(id).is_self(); }
  std::vector<int> linking_crossing_ids() const;
  std::vector<int> self_crossing_ids(int component) const;
  std::vector<int> crossing_ids() const;

  bool empty() const { return crossings_.empty(); }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.components_ == b.components_ && a.signs() == b.signs() &&
           a.virtual_count_ == b.virtual_count_;
  }

  std::map<int, int> signs() const;

private:
  std::vector<std::vector<CodeEntry>> components_;
  std::map<int, Crossing> crossings_;
  std::optional<int> virtual_count_;
};

// Gauss code text format: components separated by "/", one token per endpoint
// ("O7+", "U7+", ...), optional "% v=<n>" header, "#" comment lines.
Diagram parse_gauss_code(const std::string& text);
std::string serialize(const Diagram& d);

// Two-component subdiagram K_i u K_j: keeps self crossings of i and j and
// their mutual linking crossings, drops everything else. virtual_count is
// unknown for the result and therefore cleared.
Diagram extract_pair(const Diagram& d, int i, int j);

// One-component subdiagram D_i carrying exactly the self crossings of
// component i.
Diagram extract_component_knot(const Diagram& d, int i);

} // namespace vlink
