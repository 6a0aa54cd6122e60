#ifndef INTPOS_ENUMERATE_HPP
#define INTPOS_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "intpos/families.hpp"
#include "intpos/weak_order.hpp"

namespace intpos {

using LeqFn = std::function<bool(const IntRelation&, const IntRelation&)>;
using BinOpFn = std::function<IntRelation(const IntRelation&, const IntRelation&)>;

// Complete, duplicate-free universes, canonically sorted by
// (rank, inc mask, dec mask) so every report is byte-stable.
// Feasibility budgets: Rel/SemiTrans/Trans n <= 3; Antisym and Poset n <= 5;
// all families n <= 5 and element families (WOEP, PEP) n <= 6.
std::vector<IntRelation> enumerate_level(Level level, int n);
std::vector<IntRelation> enumerate_family(const FamilyId& f, int n);

void canonical_sort(std::vector<IntRelation>& universe);

// The enumeration grid of the nine element/interval/face families
// (weak-order, Tamari and boolean columns) for n = 1..n_max.
struct CountTable {
  int n_max = 0;
  std::vector<std::pair<std::string, std::vector<long long>>> rows;
};

CountTable count_table(int n_max);

// Unique maximal common lower bound (resp. minimal upper bound) of {r,s}
// inside the universe, when it exists and dominates every other bound.
std::optional<IntRelation> brute_meet(const std::vector<IntRelation>& universe,
                                      const LeqFn& leq, const IntRelation& r,
                                      const IntRelation& s);
std::optional<IntRelation> brute_join(const std::vector<IntRelation>& universe,
                                      const LeqFn& leq, const IntRelation& r,
                                      const IntRelation& s);

struct LatticeReport {
  std::size_t size = 0;
  bool lattice = false;
  bool graded = false;  // every cover changes |Dec|-|Inc| by exactly 1
  std::string counterexample;
};

LatticeReport check_lattice(const std::vector<IntRelation>& universe,
                            const LeqFn& leq);

struct SublatticeReport {
  bool closed_meet = false;
  bool closed_join = false;
  std::string counterexample;
};

// Closure of `sub` under the ambient operations, with the first escaping
// pair reported.
SublatticeReport check_sublattice(const std::vector<IntRelation>& sub,
                                  const BinOpFn& ambient_meet,
                                  const BinOpFn& ambient_join);

struct GradedReport {
  bool graded = false;
  std::vector<int> maximal_chain_lengths;  // between global bottom and top
  std::string detail;
};

GradedReport check_graded(const std::vector<IntRelation>& universe,
                          const LeqFn& leq);

// Lengths of the maximal bottom-to-top chains passing through `via`.
std::vector<int> check_graded_through(const std::vector<IntRelation>& universe,
                                      const LeqFn& leq, const IntRelation& via);

// Cover pairs (lower index, upper index) of the universe under leq.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<IntRelation>& universe, const LeqFn& leq);

// Universe cache in the relation text format, one line per element, under a
// `# universe <name> n=<k> count=<c>` header. The directory is taken from
// the INTPOS_CACHE_DIR environment variable; caching is disabled when unset.
std::optional<std::vector<IntRelation>> load_universe_cache(
    const std::string& name, int n);
void store_universe_cache(const std::string& name, int n,
                          const std::vector<IntRelation>& universe);

}  // namespace intpos

#endif
