#include "intpos/projections.hpp"

#include <algorithm>

#include "intpos/weak_order.hpp"

namespace intpos {

namespace {

void require_poset_arg(const IntRelation& r) {
  if (!is_poset(r)) throw domain_error("projection maps act on posets");
}

void require_orientation_size(const Orientation& o, const IntRelation& r) {
  if (o.n != r.n()) throw domain_error("orientation size differs from relation");
}

IntRelation ipip_pm_id(const Orientation& o, const IntRelation& r) {
  IntRelation out = r;
  const int n = r.n();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 1; c <= n; ++c) {
      if (!r.inc_contains(a, c)) continue;
      bool del = false;
      for (int lo = a; lo < c && !del; ++lo) {
        if (lo != a && !o.in_down(lo)) continue;
        for (int hi = lo + 1; hi <= c; ++hi) {
          if (hi != c && !o.in_up(hi)) continue;
          if (!r.contains(lo, hi)) {
            del = true;
            break;
          }
        }
      }
      if (del) out = out.without(a, c);
    }
  return out;
}

IntRelation dpip_pm_dd(const Orientation& o, const IntRelation& r) {
  IntRelation out = r;
  const int n = r.n();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 1; c <= n; ++c) {
      if (!r.dec_contains(a, c)) continue;
      bool del = false;
      for (int lo = a; lo < c && !del; ++lo) {
        if (lo != a && !o.in_up(lo)) continue;
        for (int hi = lo + 1; hi <= c; ++hi) {
          if (hi != c && !o.in_down(hi)) continue;
          if (!r.contains(hi, lo)) {
            del = true;
            break;
          }
        }
      }
      if (del) out = out.without(c, a);
    }
  return out;
}

IntRelation ipip_one_sided_id(const Orientation& o, bool plus,
                              const IntRelation& r) {
  IntRelation out = r;
  const int n = r.n();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 1; c <= n; ++c) {
      if (!r.inc_contains(a, c)) continue;
      for (int b = a + 1; b < c; ++b) {
        const bool del = plus ? (o.in_up(b) && !r.contains(a, b))
                              : (o.in_down(b) && !r.contains(b, c));
        if (del) {
          out = out.without(a, c);
          break;
        }
      }
    }
  return out;
}

IntRelation dpip_one_sided_dd(const Orientation& o, bool plus,
                              const IntRelation& r) {
  IntRelation out = r;
  const int n = r.n();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 1; c <= n; ++c) {
      if (!r.dec_contains(a, c)) continue;
      for (int b = a + 1; b < c; ++b) {
        const bool del = plus ? (o.in_up(b) && !r.contains(c, b))
                              : (o.in_down(b) && !r.contains(b, a));
        if (del) {
          out = out.without(c, a);
          break;
        }
      }
    }
  return out;
}

}  // namespace

IntRelation iwoip_id(const IntRelation& poset) {
  require_poset_arg(poset);
  const int n = poset.n();
  const IntRelation gaps =
      IntRelation::from_masks(n, ~poset.inc() & all_pairs(n), 0);
  const IntRelation reachable = transitive_closure(gaps);
  return IntRelation::from_masks(n, poset.inc() & ~reachable.inc(),
                                 poset.dec());
}

IntRelation dwoip_dd(const IntRelation& poset) {
  require_poset_arg(poset);
  const int n = poset.n();
  const IntRelation gaps =
      IntRelation::from_masks(n, 0, ~poset.dec() & all_pairs(n));
  const IntRelation reachable = transitive_closure(gaps);
  return IntRelation::from_masks(n, poset.inc(),
                                 poset.dec() & ~reachable.dec());
}

IntRelation woip_d(const IntRelation& poset) {
  return iwoip_id(dwoip_dd(poset));
}

IntRelation ipip_id(Epsilon eps, const Orientation& o, const IntRelation& poset) {
  require_poset_arg(poset);
  require_orientation_size(o, poset);
  switch (eps) {
    case Epsilon::Plus:
      return ipip_one_sided_id(o, true, poset);
    case Epsilon::Minus:
      return ipip_one_sided_id(o, false, poset);
    case Epsilon::PlusMinus:
      return ipip_pm_id(o, poset);
    case Epsilon::None:
      return ipip_pm_id(o, iwoip_id(poset));
  }
  throw domain_error("unknown epsilon");
}

IntRelation dpip_dd(Epsilon eps, const Orientation& o, const IntRelation& poset) {
  require_poset_arg(poset);
  require_orientation_size(o, poset);
  switch (eps) {
    case Epsilon::Plus:
      return dpip_one_sided_dd(o, true, poset);
    case Epsilon::Minus:
      return dpip_one_sided_dd(o, false, poset);
    case Epsilon::PlusMinus:
      return dpip_pm_dd(o, poset);
    case Epsilon::None:
      return dpip_pm_dd(o, dwoip_dd(poset));
  }
  throw domain_error("unknown epsilon");
}

IntRelation pip_d(const Orientation& o, const IntRelation& poset) {
  return ipip_id(Epsilon::None, o, dpip_dd(Epsilon::None, o, poset));
}

IntRelation insert_permutree(const Orientation& o, const Permutation& p) {
  return pip_d(o, chain_poset(p));
}

IntRelation insert_interval(const Orientation& o, const WOInterval& iv) {
  return pip_d(o, interval_poset(iv));
}

IntRelation insert_schroder(const Orientation& o, const OrderedPartition& p) {
  return pip_d(o, partition_poset(p));
}

namespace {

// Incomparable pairs of r violating both (spade) and (club); conditions
// match the PFP membership test.
std::vector<std::pair<int, int>> pfp_defects(const Orientation& o,
                                             const IntRelation& r) {
  std::vector<std::pair<int, int>> out;
  const auto fam = FamilyId::pfp(o);
  for (const auto& v : violations(fam, r))
    if (v.condition == "PFP") out.emplace_back(v.a, v.c);
  return out;
}

}  // namespace

PfpAdditionResult pfp_addition(AdditionDirection dir, const Orientation& o,
                               const IntRelation& poset) {
  require_poset_arg(poset);
  require_orientation_size(o, poset);
  PfpAdditionResult res;
  IntRelation cur = poset;
  const int cap = poset.n() * poset.n();
  for (;;) {
    if (is_member(FamilyId::pfp(o), cur)) {
      res.poset = cur;
      return res;
    }
    if (res.iterations >= cap) {
      res.hit_cap = true;
      return res;
    }
    const auto defects = pfp_defects(o, cur);
    if (defects.empty()) {
      res.stalled = true;  // a PIP condition fails but no pair is addable
      return res;
    }
    IntRelation next = cur;
    for (auto [a, c] : defects)
      next = dir == AdditionDirection::Increasing ? next.with(a, c)
                                                  : next.with(c, a);
    next = transitive_closure(next);
    if (!is_antisymmetric(next)) {
      res.stalled = true;
      return res;
    }
    cur = next;
    ++res.iterations;
  }
}

namespace {

void require_member(const FamilyId& f, const IntRelation& r) {
  if (!is_member(f, r))
    throw domain_error("input is not a member of " + family_name(f));
}

// Greatest lower / least upper bound of {r, s} inside the family, by direct
// search over the enumerated family. Small n only; used for the face
// families and as the cross-check of the experimental addition formulas.
std::optional<IntRelation> scan_bound(const FamilyId& f, const IntRelation& r,
                                      const IntRelation& s, bool lower) {
  std::vector<IntRelation> bounds;
  for (const auto& t : detail::posets_by_filter(r.n())) {
    if (!is_member(f, t)) continue;
    if (lower ? (wo_leq(t, r) && wo_leq(t, s))
              : (wo_leq(r, t) && wo_leq(s, t)))
      bounds.push_back(t);
  }
  if (bounds.empty()) return std::nullopt;
  IntRelation best = bounds.front();
  for (const auto& t : bounds)
    if (lower ? wo_leq(best, t) : wo_leq(t, best)) best = t;
  for (const auto& t : bounds)
    if (!(lower ? wo_leq(t, best) : wo_leq(best, t)))
      return std::nullopt;  // no unique extremal bound
  return best;
}

IntRelation face_meet_join(const FamilyId& f, const IntRelation& r,
                           const IntRelation& s, bool meet_side) {
  const Orientation o = f.orientation ? *f.orientation
                                      : Orientation::weak(r.n());
  const IntRelation woip_value =
      meet_side ? dwoip_dd(meet(Level::Poset, r, s))
                : iwoip_id(join(Level::Poset, r, s));
  const auto added = pfp_addition(meet_side ? AdditionDirection::Increasing
                                            : AdditionDirection::Decreasing,
                                  o, woip_value);
  if (r.n() <= 5) {
    const auto brute = scan_bound(f, r, s, meet_side);
    if (!brute)
      throw domain_error("no unique bound inside " + family_name(f));
    if (added.poset && *added.poset != *brute)
      throw domain_error("experimental addition diverged from the " +
                         family_name(f) + " bound on " + to_text(r) + " and " +
                         to_text(s));
    return *brute;
  }
  if (!added.poset)
    throw domain_error("addition loop did not converge for " + family_name(f));
  return *added.poset;
}

}  // namespace

IntRelation family_meet(const FamilyId& f, const IntRelation& r,
                        const IntRelation& s) {
  require_same_size(r, s);
  require_member(f, r);
  require_member(f, s);
  switch (f.tag) {
    case FamilyTag::WOEP:
      return meet(Level::Poset, r, s);
    case FamilyTag::IWOIP:
      return meet(Level::Poset, r, s);
    case FamilyTag::DWOIP:
      return dwoip_dd(meet(Level::Poset, r, s));
    case FamilyTag::WOIP:
    case FamilyTag::PIP:
    case FamilyTag::PEP:
      return dwoip_dd(meet(Level::Poset, r, s));
    case FamilyTag::IPIP:
      return meet(Level::Poset, r, s);
    case FamilyTag::DPIP:
      return dpip_dd(f.eps, *f.orientation, meet(Level::Poset, r, s));
    case FamilyTag::WOFP:
    case FamilyTag::PFP:
      return face_meet_join(f, r, s, true);
  }
  throw domain_error("unknown family");
}

IntRelation family_join(const FamilyId& f, const IntRelation& r,
                        const IntRelation& s) {
  require_same_size(r, s);
  require_member(f, r);
  require_member(f, s);
  switch (f.tag) {
    case FamilyTag::WOEP:
      return join(Level::Poset, r, s);
    case FamilyTag::IWOIP:
      return iwoip_id(join(Level::Poset, r, s));
    case FamilyTag::DWOIP:
      return join(Level::Poset, r, s);
    case FamilyTag::WOIP:
    case FamilyTag::PIP:
    case FamilyTag::PEP:
      return iwoip_id(join(Level::Poset, r, s));
    case FamilyTag::IPIP:
      return ipip_id(f.eps, *f.orientation, join(Level::Poset, r, s));
    case FamilyTag::DPIP:
      return join(Level::Poset, r, s);
    case FamilyTag::WOFP:
    case FamilyTag::PFP:
      return face_meet_join(f, r, s, false);
  }
  throw domain_error("unknown family");
}

}  // namespace intpos
