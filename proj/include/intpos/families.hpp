#ifndef INTPOS_FAMILIES_HPP
#define INTPOS_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "intpos/orientation.hpp"
#include "intpos/relation.hpp"

namespace intpos {

enum class FamilyTag { WOEP, WOIP, IWOIP, DWOIP, WOFP, PEP, PIP, IPIP, DPIP, PFP };

// The epsilon variants of the IPIP/DPIP families and deletions. None is the
// plain IPIP / DPIP (the pm condition together with IWOIP / DWOIP).
enum class Epsilon { None, Minus, Plus, PlusMinus };

/// One of the poset families, with its orientation where the family is
/// orientation-parameterized. TOEP/TOIP/TOFP are PEP/PIP/PFP at (n,0,[n]),
/// BOEP/BOIP/BOFP at (n,[n],[n]).
struct FamilyId {
  FamilyTag tag;
  Epsilon eps = Epsilon::None;
  std::optional<Orientation> orientation;

  static FamilyId woep() { return {FamilyTag::WOEP, Epsilon::None, {}}; }
  static FamilyId woip() { return {FamilyTag::WOIP, Epsilon::None, {}}; }
  static FamilyId iwoip() { return {FamilyTag::IWOIP, Epsilon::None, {}}; }
  static FamilyId dwoip() { return {FamilyTag::DWOIP, Epsilon::None, {}}; }
  static FamilyId wofp() { return {FamilyTag::WOFP, Epsilon::None, {}}; }
  static FamilyId pep(const Orientation& o) {
    return {FamilyTag::PEP, Epsilon::None, o};
  }
  static FamilyId pip(const Orientation& o) {
    return {FamilyTag::PIP, Epsilon::None, o};
  }
  static FamilyId pfp(const Orientation& o) {
    return {FamilyTag::PFP, Epsilon::None, o};
  }
  static FamilyId ipip(const Orientation& o, Epsilon e = Epsilon::None) {
    return {FamilyTag::IPIP, e, o};
  }
  static FamilyId dpip(const Orientation& o, Epsilon e = Epsilon::None) {
    return {FamilyTag::DPIP, e, o};
  }
};

std::string family_name(const FamilyId& f);

/// A witness against membership: the named condition fails on the stated
/// tuple ((a,c) pair witnesses leave b = 0).
struct FamilyViolation {
  std::string condition;
  int a = 0;
  int b = 0;
  int c = 0;
};

// Membership test per the family characterizations. The chain conditions
// (WOIP / IPIP / DPIP variants) are checked on cover relations only, which
// is equivalent to the full quantification; is_member_full quantifies over
// all relations and serves as the oracle for that equivalence.
// Non-poset input is rejected.
bool is_member(const FamilyId& f, const IntRelation& r);
bool is_member_full(const FamilyId& f, const IntRelation& r);

// All violating tuples in lexicographic order (full quantification).
std::vector<FamilyViolation> violations(const FamilyId& f, const IntRelation& r);

// O-snake existence between a and c (a < c required). Comparable pairs count
// as degenerate snakes; the search recurses on the first snake step rather
// than enumerating alternating sequences.
bool has_snake(const Orientation& o, const IntRelation& poset, int a, int c);

// Bit over pair_index(a,c) set when some O-snake joins a to c.
PairMask snake_pairs(const Orientation& o, const IntRelation& poset);

enum class ConflictTag { IWOIP, DWOIP, WOIP, IPIP, DPIP, PIP, INCOMP, PEP };

/// The built-in conflict functions of the sublattice machinery.
struct ConflictFunctionId {
  ConflictTag tag;
  Epsilon eps = Epsilon::None;
  std::optional<Orientation> orientation;

  static ConflictFunctionId iwoip() { return {ConflictTag::IWOIP, Epsilon::None, {}}; }
  static ConflictFunctionId dwoip() { return {ConflictTag::DWOIP, Epsilon::None, {}}; }
  static ConflictFunctionId woip() { return {ConflictTag::WOIP, Epsilon::None, {}}; }
  static ConflictFunctionId ipip(const Orientation& o, Epsilon e = Epsilon::None) {
    return {ConflictTag::IPIP, e, o};
  }
  static ConflictFunctionId dpip(const Orientation& o, Epsilon e = Epsilon::None) {
    return {ConflictTag::DPIP, e, o};
  }
  static ConflictFunctionId pip(const Orientation& o) {
    return {ConflictTag::PIP, Epsilon::None, o};
  }
  static ConflictFunctionId incomp(const Orientation& o) {
    return {ConflictTag::INCOMP, Epsilon::None, o};
  }
  static ConflictFunctionId pep(const Orientation& o) {
    return {ConflictTag::PEP, Epsilon::None, o};
  }
};

std::string conflict_name(const ConflictFunctionId& cf);

// Conflict pairs of the poset, as a mask over unordered pairs {a,c}.
PairMask conflict_set(const ConflictFunctionId& cf, const IntRelation& poset);

// The family a conflict function carves out, when it names one: the
// conflict-free posets of each built-in function form the family of the same
// name (INCOMP at (n,0,0) gives WOEP).
std::optional<FamilyId> conflict_family(const ConflictFunctionId& cf);

struct PropertyCheck {
  bool holds = true;
  std::string counterexample;  // empty when the property holds
};

/// Verified-or-counterexample report over all posets of IPos(n) for the six
/// conflict-function properties (with the three variants of (ii)).
struct ConflictPropertyReport {
  PropertyCheck local;
  PropertyCheck increasing;
  PropertyCheck decreasing;
  PropertyCheck incomparable;
  PropertyCheck consistent;
  PropertyCheck monotone;
  PropertyCheck semitransitive;
};

ConflictPropertyReport conflict_properties(const ConflictFunctionId& cf, int n);

namespace detail {

// Posets of IPos(n) by filtering antisymmetric relations; small n only.
// The oracle module layers budgets, caching and the n=5 extension on top.
std::vector<IntRelation> posets_by_filter(int n);

}  // namespace detail

}  // namespace intpos

#endif
