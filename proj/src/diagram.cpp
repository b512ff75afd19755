#include "vlink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vlink {

Diagram::Diagram(std::vector<std::vector<CodeEntry>> components, std::map<int, int> signs,
                 std::optional<int> virtual_count)
    : components_(std::move(components)), virtual_count_(virtual_count) {
  if (components_.empty()) components_.emplace_back();
  if (virtual_count_ && *virtual_count_ < 0)
    throw PreconditionViolated("virtual_count must be non-negative");

  struct Seen {
    std::optional<Endpoint> over, under;
  };
  std::map<int, Seen> seen;
  for (int ci = 0; ci < static_cast<int>(components_.size()); ++ci) {
    const auto& comp = components_[ci];
    for (int pos = 0; pos < static_cast<int>(comp.size()); ++pos) {
      const CodeEntry& e = comp[pos];
      if (e.crossing_id <= 0) throw BadMultiplicity("crossing ids must be positive");
      Endpoint ep{e.crossing_id, e.role, ci, pos};
      auto& s = seen[e.crossing_id];
      auto& slot = (e.role == Role::Over) ? s.over : s.under;
      if (slot)
        throw BadMultiplicity("crossing " + std::to_string(e.crossing_id) +
                              " occurs more than once as " +
                              (e.role == Role::Over ? "O" : "U"));
      slot = ep;
    }
  }
  for (auto& [id, s] : seen) {
    if (!s.over || !s.under)
      throw BadMultiplicity("crossing " + std::to_string(id) +
                            " must occur exactly once as O and once as U");
    auto it = signs.find(id);
    if (it == signs.end())
      throw SignMismatch("no sign recorded for crossing " + std::to_string(id));
    if (it->second != 1 && it->second != -1)
      throw SignMismatch("sign of crossing " + std::to_string(id) + " must be +1 or -1");
    crossings_[id] = Crossing{id, it->second, *s.over, *s.under};
  }
  if (signs.size() != seen.size())
    throw BadMultiplicity("sign table mentions crossings absent from the code");
}

Diagram Diagram::empty_link(int n_components) {
  if (n_components < 1) throw PreconditionViolated("need at least one component");
  return Diagram(std::vector<std::vector<CodeEntry>>(n_components), {}, std::nullopt);
}

const std::vector<CodeEntry>& Diagram::component(int i) const {
  if (i < 0 || i >= component_count()) throw IndexOutOfRange("component index out of range");
  return components_[i];
}

const Crossing& Diagram::crossing(int id) const {
  auto it = crossings_.find(id);
  if (it == crossings_.end()) throw UnknownCrossing("unknown crossing " + std::to_string(id));
  return it->second;
}

Diagram Diagram::with_virtual_count(std::optional<int> v) const {
  return Diagram(components_, signs(), v);
}

std::vector<int> Diagram::linking_crossing_ids() const {
  std::vector<int> out;
  for (const auto& [id, c] : crossings_)
    if (!c.is_self()) out.push_back(id);
  return out;
}

std::vector<int> Diagram::self_crossing_ids(int component) const {
  if (component < 0 || component >= component_count())
    throw IndexOutOfRange("component index out of range");
  std::vector<int> out;
  for (const auto& [id, c] : crossings_)
    if (c.is_self() && c.over.component == component) out.push_back(id);
  return out;
}

std::vector<int> Diagram::crossing_ids() const {
  std::vector<int> out;
  out.reserve(crossings_.size());
  for (const auto& [id, c] : crossings_) out.push_back(id);
  return out;
}

std::map<int, int> Diagram::signs() const {
  std::map<int, int> out;
  for (const auto& [id, c] : crossings_) out[id] = c.sign;
  return out;
}

namespace {

bool parse_symbol(const std::string& tok, CodeEntry& entry, int& sign) {
  if (tok.size() < 3) return false;
  if (tok[0] != 'O' && tok[0] != 'U') return false;
  char last = tok.back();
  if (last != '+' && last != '-') return false;
  long id = 0;
  for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    id = id * 10 + (tok[i] - '0');
    if (id > 1000000000) return false;
  }
  if (id <= 0) return false;
  entry.crossing_id = static_cast<int>(id);
  entry.role = (tok[0] == 'O') ? Role::Over : Role::Under;
  sign = (last == '+') ? +1 : -1;
  return true;
}

} // namespace

Diagram parse_gauss_code(const std::string& text) {
  std::optional<int> virtual_count;
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  bool first_content_line = true;
  while (std::getline(lines, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    if (line[start] == '%') {
      if (!first_content_line) throw SyntaxError("header must precede the code");
      std::string rest = line.substr(start + 1);
      std::size_t v = rest.find_first_not_of(" \t");
      if (v == std::string::npos || rest[v] != 'v') throw SyntaxError("malformed header: " + line);
      std::size_t eq = rest.find('=', v);
      if (eq == std::string::npos) throw SyntaxError("malformed header: " + line);
      std::string num = rest.substr(eq + 1);
      std::size_t pos = 0;
      int value = 0;
      try {
        value = std::stoi(num, &pos);
      } catch (const std::exception&) {
        throw SyntaxError("malformed header: " + line);
      }
      while (pos < num.size() && std::isspace(static_cast<unsigned char>(num[pos]))) ++pos;
      if (pos != num.size() || value < 0) throw SyntaxError("malformed header: " + line);
      virtual_count = value;
      first_content_line = false;
      continue;
    }
    first_content_line = false;
    std::string cur;
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        if (!cur.empty()) tokens.push_back(cur), cur.clear();
      } else if (ch == '/') {
        if (!cur.empty()) tokens.push_back(cur), cur.clear();
        tokens.emplace_back("/");
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) tokens.push_back(cur);
  }

  std::vector<std::vector<CodeEntry>> components(1);
  std::map<int, int> signs;
  for (const std::string& tok : tokens) {
    if (tok == "/") {
      components.emplace_back();
      continue;
    }
    CodeEntry entry;
    int sign = 0;
    if (!parse_symbol(tok, entry, sign)) throw SyntaxError("malformed token: " + tok);
    auto it = signs.find(entry.crossing_id);
    if (it == signs.end()) {
      signs[entry.crossing_id] = sign;
    } else if (it->second != sign) {
      throw SignMismatch("crossing " + std::to_string(entry.crossing_id) +
                         " carries conflicting signs");
    }
    components.back().push_back(entry);
  }
  return Diagram(std::move(components), std::move(signs), virtual_count);
}

std::string serialize(const Diagram& d) {
  std::ostringstream out;
  if (d.virtual_count()) out << "% v=" << *d.virtual_count() << "\n";
  for (int ci = 0; ci < d.component_count(); ++ci) {
    if (ci > 0) out << " / ";
    const auto& comp = d.component(ci);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i > 0) out << ' ';
      const CodeEntry& e = comp[i];
      out << (e.role == Role::Over ? 'O' : 'U') << e.crossing_id
          << (d.crossing(e.crossing_id).sign > 0 ? '+' : '-');
    }
  }
  return out.str();
}

namespace {

// Keep only the listed components (in the given order) and the crossings whose
// endpoints both land on kept components.
Diagram restrict_to(const Diagram& d, const std::vector<int>& keep) {
  std::vector<std::vector<CodeEntry>> comps;
  std::map<int, int> signs;
  for (int src : keep) {
    std::vector<CodeEntry> seq;
    for (const CodeEntry& e : d.component(src)) {
      const Crossing& c = d.crossing(e.crossing_id);
      int other = (e.role == Role::Over) ? c.under.component : c.over.component;
      if (std::find(keep.begin(), keep.end(), other) == keep.end()) continue;
      seq.push_back(e);
      signs[e.crossing_id] = c.sign;
    }
    comps.push_back(std::move(seq));
  }
  return Diagram(std::move(comps), std::move(signs), std::nullopt);
}

} // namespace

Diagram extract_pair(const Diagram& d, int i, int j) {
  if (i < 0 || i >= d.component_count() || j < 0 || j >= d.component_count())
    throw IndexOutOfRange("component index out of range");
  if (i == j) throw IndexOutOfRange("pair extraction needs two distinct components");
  return restrict_to(d, {i, j});
}

Diagram extract_component_knot(const Diagram& d, int i) {
  if (i < 0 || i >= d.component_count()) throw IndexOutOfRange("component index out of range");
  return restrict_to(d, {i});
}

} // namespace vlink
