#include "intpos/dot.hpp"

#include <sstream>

namespace intpos {

std::string hasse_dot(const IntRelation& poset) {
  if (!is_poset(poset)) throw domain_error("Hasse diagrams require a poset");
  const int n = poset.n();
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int u = 1; u <= n; ++u) out << "  v" << u << " [label=\"" << u << "\"];\n";
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v || !poset.contains(u, v)) continue;
      bool covered = false;
      for (int w = 1; w <= n && !covered; ++w)
        if (w != u && w != v && poset.contains(u, w) && poset.contains(w, v))
          covered = true;
      if (!covered) out << "  v" << u << " -> v" << v << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const std::vector<IntRelation>& universe,
                      const LeqFn& leq, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < universe.size(); ++i)
    out << "  r" << i << " [label=\"" << to_text(universe[i]) << "\"];\n";
  for (auto [lo, hi] : hasse_edges(universe, leq))
    out << "  r" << lo << " -> r" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace intpos
