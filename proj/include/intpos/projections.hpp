#ifndef INTPOS_PROJECTIONS_HPP
#define INTPOS_PROJECTIONS_HPP

#include <optional>

#include "intpos/families.hpp"
#include "intpos/orientation.hpp"
#include "intpos/perms.hpp"
#include "intpos/relation.hpp"

namespace intpos {

// One-pass deletions onto IWOIP / DWOIP / WOIP. iwoip_id removes the
// increasing pairs (a,c) admitting a chain a < b1 < ... < bk < c of
// consecutive non-relations; the result is the weak order minimal IWOIP
// poset above the input. dwoip_dd is dual; woip_d is their composition
// (either order).
IntRelation iwoip_id(const IntRelation& poset);
IntRelation dwoip_dd(const IntRelation& poset);
IntRelation woip_d(const IntRelation& poset);

// The ipip/dpip deletions of the four epsilon variants. Epsilon::None is the
// composed map (the pm deletion after the WOIP-side deletion); the result is
// the weak order minimal (resp. maximal) poset of the family above (resp.
// below) the input.
IntRelation ipip_id(Epsilon eps, const Orientation& o, const IntRelation& poset);
IntRelation dpip_dd(Epsilon eps, const Orientation& o, const IntRelation& poset);

// pip_d = ipip_id(None) o dpip_dd(None) = dpip_dd(None) o ipip_id(None);
// lands in PIP(O).
IntRelation pip_d(const Orientation& o, const IntRelation& poset);

// Insertion maps, realized through the PIP deletion of the induced poset.
IntRelation insert_permutree(const Orientation& o, const Permutation& p);
IntRelation insert_interval(const Orientation& o, const WOInterval& iv);
IntRelation insert_schroder(const Orientation& o, const OrderedPartition& p);

enum class AdditionDirection { Increasing, Decreasing };

/// Outcome of the experimental PFP addition loop. No convergence argument
/// is known for the recursion, so a cap hit or a stalled iteration is
/// reported in the result instead of trusted.
struct PfpAdditionResult {
  std::optional<IntRelation> poset;  // PFP(O) member on success
  int iterations = 0;
  bool hit_cap = false;
  bool stalled = false;  // nothing to add yet not a member
};

// Repeatedly add (a,c) (Increasing) or (c,a) (Decreasing) over incomparable
// pairs violating both the spade and club conditions, re-closing
// transitively, until PFP(O) membership or the n^2 iteration cap.
PfpAdditionResult pfp_addition(AdditionDirection dir, const Orientation& o,
                               const IntRelation& poset);

// Meet and join within a family: a closed form where one exists, the
// experimental addition cross-checked against a brute-force search within
// the enumerated family for WOFP and PFP.
IntRelation family_meet(const FamilyId& f, const IntRelation& r,
                        const IntRelation& s);
IntRelation family_join(const FamilyId& f, const IntRelation& r,
                        const IntRelation& s);

}  // namespace intpos

#endif
