#ifndef INTPOS_DOT_HPP
#define INTPOS_DOT_HPP

#include <string>
#include <vector>

#include "intpos/enumerate.hpp"
#include "intpos/relation.hpp"

namespace intpos {

// Hasse diagram (transitive reduction) of a single poset as a DOT digraph;
// nodes are the integers 1..n, edges point from smaller to larger element of
// the order.
std::string hasse_dot(const IntRelation& poset);

// Cover graph of a universe under leq; nodes carry the relation text.
std::string hasse_dot(const std::vector<IntRelation>& universe,
                      const LeqFn& leq, const std::string& name);

}  // namespace intpos

#endif
