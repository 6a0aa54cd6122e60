#ifndef INTPOS_WEAK_ORDER_HPP
#define INTPOS_WEAK_ORDER_HPP

#include <string>
#include <vector>

#include "intpos/relation.hpp"

namespace intpos {

// Carrier sets of the meet/join tower: IRel(n), IAntisym(n), IST(n),
// ITrans(n), IPos(n).
enum class Level { Rel, Antisym, SemiTrans, Trans, Poset };

const char* level_name(Level level);
Level parse_level(std::string_view name);

// R <= S iff Inc R >= Inc S and Dec R <= Dec S.
inline bool wo_leq(const IntRelation& r, const IntRelation& s) {
  require_same_size(r, s);
  return (s.inc() & ~r.inc()) == 0 && (r.dec() & ~s.dec()) == 0;
}

inline bool wo_less(const IntRelation& r, const IntRelation& s) {
  return wo_leq(r, s) && r != s;
}

// Grading of the weak order.
inline int rank(const IntRelation& r) { return r.dec_size() - r.inc_size(); }

bool in_carrier(Level level, const IntRelation& r);
void require_carrier(Level level, const IntRelation& r);

// Transitive decreasing/increasing deletion. One pass over the decreasing
// (resp. increasing) pairs; the witnesses i, j may equal the endpoints since
// relations are reflexive. For semitransitive input the result is transitive.
IntRelation tdd(const IntRelation& r);
IntRelation tid(const IntRelation& r);

// Meet and join within the carrier named by `level`:
//   Rel, Antisym:  (Inc R | Inc S) | (Dec R & Dec S)       and dual
//   SemiTrans:     tc(Inc R | Inc S) | (Dec R & Dec S)     and dual
//   Trans, Poset:  tdd of the semitransitive meet / tid of the join
// Inputs are checked for carrier membership.
IntRelation meet(Level level, const IntRelation& r, const IntRelation& s);
IntRelation join(Level level, const IntRelation& r, const IntRelation& s);

// Upper covers of r within the carrier: delete one increasing pair or add
// one decreasing pair, subject to the carrier-specific local conditions.
// No closed form is known for Trans; that level is rejected here and handled
// by enumeration in the oracle.
std::vector<IntRelation> covers(Level level, const IntRelation& r);

}  // namespace intpos

#endif
