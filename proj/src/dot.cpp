#include "latcon/dot.hpp"

#include <algorithm>
#include <map>

namespace latcon {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const std::string& name, const FiniteLattice& l,
                   const PlanarDiagram* d, const std::vector<PrimeInterval>& highlight) {
  std::string out = "digraph " + quote(name) + " {\n";
  out += "  rankdir=BT;\n  node [shape=circle];\n  edge [arrowhead=none];\n";
  for (Elem x = 0; x < l.size(); ++x) out += "  " + quote(l.id(x)) + ";\n";
  if (d) {
    std::map<long, std::vector<Elem>> levels;
    for (Elem x = 0; x < l.size(); ++x) levels[d->rank(x)].push_back(x);
    for (auto& [rank, elems] : levels) {
      std::sort(elems.begin(), elems.end(),
                [&](Elem a, Elem b) { return d->xpos(a) < d->xpos(b); });
      out += "  { rank=same;";
      for (Elem x : elems) out += " " + quote(l.id(x)) + ";";
      out += " }\n";
      // Invisible edges keep left-to-right order inside the rank.
      for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        out += "  " + quote(l.id(elems[i])) + " -> " + quote(l.id(elems[i + 1])) +
               " [style=invis];\n";
      }
    }
  }
  for (auto p : l.prime_intervals()) {
    const bool bold = std::find(highlight.begin(), highlight.end(), p) != highlight.end();
    out += "  " + quote(l.id(p.lo)) + " -> " + quote(l.id(p.hi)) +
           " [penwidth=" + (bold ? "3" : "1") + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace latcon
