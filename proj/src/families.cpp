#include "intpos/families.hpp"

#include <algorithm>
#include <sstream>

namespace intpos {

namespace {

std::string eps_suffix(Epsilon e) {
  switch (e) {
    case Epsilon::None:
      return "";
    case Epsilon::Minus:
      return "-";
    case Epsilon::Plus:
      return "+";
    case Epsilon::PlusMinus:
      return "+-";
  }
  return "";
}

void require_poset(const IntRelation& r) {
  if (!is_poset(r)) throw domain_error("family membership requires a poset");
}

// The four orientation chain conditions on a triple a < b < c.
bool ipip_plus_ok(const Orientation& o, const IntRelation& r, int a, int b,
                  int c) {
  return !(o.in_up(b) && r.inc_contains(a, c) && !r.inc_contains(a, b));
}
bool ipip_minus_ok(const Orientation& o, const IntRelation& r, int a, int b,
                   int c) {
  return !(o.in_down(b) && r.inc_contains(a, c) && !r.inc_contains(b, c));
}
bool dpip_plus_ok(const Orientation& o, const IntRelation& r, int a, int b,
                  int c) {
  return !(o.in_up(b) && r.dec_contains(a, c) && !r.dec_contains(b, c));
}
bool dpip_minus_ok(const Orientation& o, const IntRelation& r, int a, int b,
                   int c) {
  return !(o.in_down(b) && r.dec_contains(a, c) && !r.dec_contains(a, b));
}

bool iwoip_ok(const IntRelation& r, int a, int b, int c) {
  return !(r.inc_contains(a, c) && !r.inc_contains(a, b) &&
           !r.inc_contains(b, c));
}
bool dwoip_ok(const IntRelation& r, int a, int b, int c) {
  return !(r.dec_contains(a, c) && !r.dec_contains(a, b) &&
           !r.dec_contains(b, c));
}

// Strict cover pairs of a poset: related pairs with no intermediate point.
bool is_cover(const IntRelation& r, int u, int v) {
  for (int i = 1; i <= r.n(); ++i)
    if (i != u && i != v && r.contains(u, i) && r.contains(i, v)) return false;
  return true;
}

enum class Quantify { CoversOnly, Full };

// The WOIP and orientation chain conditions, quantified either over all
// related pairs or over cover relations only; the two are equivalent for
// posets.
bool chain_conditions(const FamilyId& f, const IntRelation& r, Quantify q,
                      std::vector<FamilyViolation>* sink) {
  const int n = r.n();
  const bool want_iwoip = f.tag == FamilyTag::WOIP || f.tag == FamilyTag::IWOIP ||
                          f.tag == FamilyTag::WOFP || f.tag == FamilyTag::PEP ||
                          f.tag == FamilyTag::PIP || f.tag == FamilyTag::PFP ||
                          (f.tag == FamilyTag::IPIP && f.eps == Epsilon::None);
  const bool want_dwoip = f.tag == FamilyTag::WOIP || f.tag == FamilyTag::DWOIP ||
                          f.tag == FamilyTag::WOFP || f.tag == FamilyTag::PEP ||
                          f.tag == FamilyTag::PIP || f.tag == FamilyTag::PFP ||
                          (f.tag == FamilyTag::DPIP && f.eps == Epsilon::None);
  const bool orient = f.tag == FamilyTag::PEP || f.tag == FamilyTag::PIP ||
                      f.tag == FamilyTag::PFP || f.tag == FamilyTag::IPIP ||
                      f.tag == FamilyTag::DPIP;
  bool want_ipip_p = false, want_ipip_m = false, want_dpip_p = false,
       want_dpip_m = false;
  if (orient) {
    const bool inc_side = f.tag != FamilyTag::DPIP;
    const bool dec_side = f.tag != FamilyTag::IPIP;
    const bool plus = f.eps != Epsilon::Minus;
    const bool minus = f.eps != Epsilon::Plus;
    if (f.tag == FamilyTag::PEP || f.tag == FamilyTag::PIP ||
        f.tag == FamilyTag::PFP) {
      want_ipip_p = want_ipip_m = want_dpip_p = want_dpip_m = true;
    } else {
      want_ipip_p = inc_side && plus;
      want_ipip_m = inc_side && minus;
      want_dpip_p = dec_side && plus;
      want_dpip_m = dec_side && minus;
    }
  }
  const Orientation o =
      orient ? *f.orientation : Orientation::weak(n);

  bool ok = true;
  for (int a = 1; a <= n && (ok || sink); ++a)
    for (int c = a + 1; c <= n && (ok || sink); ++c) {
      const bool inc_rel = r.inc_contains(a, c);
      const bool dec_rel = r.dec_contains(a, c);
      if (!inc_rel && !dec_rel) continue;
      if (q == Quantify::CoversOnly) {
        if (inc_rel && !is_cover(r, a, c)) continue;
        if (dec_rel && !is_cover(r, c, a)) continue;
      }
      for (int b = a + 1; b < c; ++b) {
        auto fail = [&](const char* cond) {
          ok = false;
          if (sink) sink->push_back({cond, a, b, c});
        };
        if (want_iwoip && !iwoip_ok(r, a, b, c)) fail("IWOIP");
        if (want_dwoip && !dwoip_ok(r, a, b, c)) fail("DWOIP");
        if (want_ipip_p && !ipip_plus_ok(o, r, a, b, c)) fail("IPIP+");
        if (want_ipip_m && !ipip_minus_ok(o, r, a, b, c)) fail("IPIP-");
        if (want_dpip_p && !dpip_plus_ok(o, r, a, b, c)) fail("DPIP+");
        if (want_dpip_m && !dpip_minus_ok(o, r, a, b, c)) fail("DPIP-");
      }
    }
  return ok;
}

// WOFP condition (ii): u < w  =>  u < v or v < w, over all triples.
bool wofp_condition(const IntRelation& r, std::vector<FamilyViolation>* sink) {
  const int n = r.n();
  bool ok = true;
  for (int u = 1; u <= n && (ok || sink); ++u)
    for (int w = 1; w <= n && (ok || sink); ++w) {
      if (u == w || !r.contains(u, w)) continue;
      for (int v = 1; v <= n; ++v) {
        if (v == u || v == w) continue;
        if (!r.contains(u, v) && !r.contains(v, w)) {
          ok = false;
          if (sink)
            sink->push_back({"WOFP", u, v, w});
          else
            return false;
        }
      }
    }
  return ok;
}

// PFP conditions (spade) / (club) on an incomparable pair a < c.
bool spade(const Orientation& o, const IntRelation& r, int a, int c) {
  for (int b = a + 1; b < c; ++b) {
    if (o.in_up(b) && !r.inc_contains(a, b) && !r.dec_contains(b, c))
      return true;
    if (o.in_down(b) && !r.dec_contains(a, b) && !r.inc_contains(b, c))
      return true;
  }
  return false;
}

bool club(const IntRelation& r, int a, int c) {
  for (int b = a + 1; b < c; ++b) {
    if (r.inc_contains(a, b) != r.dec_contains(b, c)) return false;
    if (r.dec_contains(a, b) != r.inc_contains(b, c)) return false;
  }
  return true;
}

bool membership(const FamilyId& f, const IntRelation& r, Quantify q,
                std::vector<FamilyViolation>* sink) {
  require_poset(r);
  const int n = r.n();
  bool ok = true;

  if (f.tag == FamilyTag::WOEP) {
    for (int a = 1; a <= n && (ok || sink); ++a)
      for (int c = a + 1; c <= n; ++c)
        if (!r.inc_contains(a, c) && !r.dec_contains(a, c)) {
          ok = false;
          if (sink)
            sink->push_back({"comparable", a, 0, c});
          else
            return false;
        }
    return ok;
  }

  if (f.tag == FamilyTag::WOFP) {
    // (ii) alone characterizes WOFP; it implies the WOIP conditions.
    return wofp_condition(r, sink);
  }

  if (!chain_conditions(f, r, q, sink)) {
    if (!sink) return false;
    ok = false;
  }

  if (f.tag == FamilyTag::PEP) {
    const PairMask snakes = snake_pairs(*f.orientation, r);
    for (int a = 1; a <= n && (ok || sink); ++a)
      for (int c = a + 1; c <= n; ++c)
        if (!((snakes >> pair_index(n, a, c)) & 1)) {
          ok = false;
          if (sink)
            sink->push_back({"snake", a, 0, c});
          else
            return false;
        }
  }

  if (f.tag == FamilyTag::PFP) {
    const Orientation& o = *f.orientation;
    for (int a = 1; a <= n && (ok || sink); ++a)
      for (int c = a + 1; c <= n; ++c) {
        if (r.inc_contains(a, c) || r.dec_contains(a, c)) continue;
        if (!spade(o, r, a, c) && !club(r, a, c)) {
          ok = false;
          if (sink)
            sink->push_back({"PFP", a, 0, c});
          else
            return false;
        }
      }
  }

  return ok;
}

}  // namespace

std::string family_name(const FamilyId& f) {
  std::string base;
  switch (f.tag) {
    case FamilyTag::WOEP: base = "WOEP"; break;
    case FamilyTag::WOIP: base = "WOIP"; break;
    case FamilyTag::IWOIP: base = "IWOIP"; break;
    case FamilyTag::DWOIP: base = "DWOIP"; break;
    case FamilyTag::WOFP: base = "WOFP"; break;
    case FamilyTag::PEP: base = "PEP"; break;
    case FamilyTag::PIP: base = "PIP"; break;
    case FamilyTag::IPIP: base = "IPIP"; break;
    case FamilyTag::DPIP: base = "DPIP"; break;
    case FamilyTag::PFP: base = "PFP"; break;
  }
  base += eps_suffix(f.eps);
  if (f.orientation) base += "(" + to_text(*f.orientation) + ")";
  return base;
}

bool is_member(const FamilyId& f, const IntRelation& r) {
  return membership(f, r, Quantify::CoversOnly, nullptr);
}

bool is_member_full(const FamilyId& f, const IntRelation& r) {
  return membership(f, r, Quantify::Full, nullptr);
}

std::vector<FamilyViolation> violations(const FamilyId& f, const IntRelation& r) {
  std::vector<FamilyViolation> out;
  membership(f, r, Quantify::Full, &out);
  return out;
}

PairMask snake_pairs(const Orientation& o, const IntRelation& r) {
  if (o.n != r.n()) throw domain_error("orientation size differs from relation");
  const int n = r.n();
  PairMask snakes = 0;
  // Increasing width; the recursive reduction only consults narrower pairs.
  for (int w = 1; w < n; ++w)
    for (int a = 1; a + w <= n; ++a) {
      const int c = a + w;
      bool found = r.inc_contains(a, c) || r.dec_contains(a, c);
      for (int b = a + 1; b < c && !found; ++b) {
        if (!((snakes >> pair_index(n, b, c)) & 1)) continue;
        if (o.in_down(b) && r.inc_contains(a, b)) found = true;
        if (o.in_up(b) && r.dec_contains(a, b)) found = true;
      }
      if (found) snakes |= pair_bit(n, a, c);
    }
  return snakes;
}

bool has_snake(const Orientation& o, const IntRelation& poset, int a, int c) {
  if (!(a < c)) throw domain_error("has_snake requires a < c");
  if (a < 1 || c > poset.n()) throw domain_error("snake endpoints outside [n]");
  return (snake_pairs(o, poset) >> pair_index(poset.n(), a, c)) & 1;
}

std::string conflict_name(const ConflictFunctionId& cf) {
  std::string base;
  switch (cf.tag) {
    case ConflictTag::IWOIP: base = "C_IWOIP"; break;
    case ConflictTag::DWOIP: base = "C_DWOIP"; break;
    case ConflictTag::WOIP: base = "C_WOIP"; break;
    case ConflictTag::IPIP: base = "C_IPIP"; break;
    case ConflictTag::DPIP: base = "C_DPIP"; break;
    case ConflictTag::PIP: base = "C_PIP"; break;
    case ConflictTag::INCOMP: base = "C_incomp"; break;
    case ConflictTag::PEP: base = "C_PEP"; break;
  }
  base += eps_suffix(cf.eps);
  if (cf.orientation) base += "(" + to_text(*cf.orientation) + ")";
  return base;
}

namespace {

PairMask conflicts_iwoip(const IntRelation& r) {
  PairMask out = 0;
  const int n = r.n();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 2; c <= n; ++c) {
      if (!r.inc_contains(a, c)) continue;
      for (int b = a + 1; b < c; ++b)
        if (!r.inc_contains(a, b) && !r.inc_contains(b, c)) {
          out |= pair_bit(n, a, c);
          break;
        }
    }
  return out;
}

PairMask conflicts_dwoip(const IntRelation& r) {
  PairMask out = 0;
  const int n = r.n();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 2; c <= n; ++c) {
      if (!r.dec_contains(a, c)) continue;
      for (int b = a + 1; b < c; ++b)
        if (!r.dec_contains(a, b) && !r.dec_contains(b, c)) {
          out |= pair_bit(n, a, c);
          break;
        }
    }
  return out;
}

PairMask conflicts_ipip_eps(const Orientation& o, Epsilon eps,
                            const IntRelation& r) {
  PairMask out = 0;
  const int n = r.n();
  const bool plus = eps == Epsilon::Plus || eps == Epsilon::PlusMinus ||
                    eps == Epsilon::None;
  const bool minus = eps == Epsilon::Minus || eps == Epsilon::PlusMinus ||
                     eps == Epsilon::None;
  for (int a = 1; a <= n; ++a)
    for (int c = a + 2; c <= n; ++c) {
      if (!r.inc_contains(a, c)) continue;
      for (int b = a + 1; b < c; ++b) {
        if ((plus && o.in_up(b) && !r.inc_contains(a, b)) ||
            (minus && o.in_down(b) && !r.inc_contains(b, c))) {
          out |= pair_bit(n, a, c);
          break;
        }
      }
    }
  if (eps == Epsilon::None) out |= conflicts_iwoip(r);
  return out;
}

PairMask conflicts_dpip_eps(const Orientation& o, Epsilon eps,
                            const IntRelation& r) {
  PairMask out = 0;
  const int n = r.n();
  const bool plus = eps == Epsilon::Plus || eps == Epsilon::PlusMinus ||
                    eps == Epsilon::None;
  const bool minus = eps == Epsilon::Minus || eps == Epsilon::PlusMinus ||
                     eps == Epsilon::None;
  for (int a = 1; a <= n; ++a)
    for (int c = a + 2; c <= n; ++c) {
      if (!r.dec_contains(a, c)) continue;
      for (int b = a + 1; b < c; ++b) {
        if ((plus && o.in_up(b) && !r.dec_contains(b, c)) ||
            (minus && o.in_down(b) && !r.dec_contains(a, b))) {
          out |= pair_bit(n, a, c);
          break;
        }
      }
    }
  if (eps == Epsilon::None) out |= conflicts_dwoip(r);
  return out;
}

}  // namespace

PairMask conflict_set(const ConflictFunctionId& cf, const IntRelation& r) {
  if (!is_poset(r)) throw domain_error("conflict functions act on posets");
  switch (cf.tag) {
    case ConflictTag::IWOIP:
      return conflicts_iwoip(r);
    case ConflictTag::DWOIP:
      return conflicts_dwoip(r);
    case ConflictTag::WOIP:
      return conflicts_iwoip(r) | conflicts_dwoip(r);
    case ConflictTag::IPIP:
      return conflicts_ipip_eps(*cf.orientation, cf.eps, r);
    case ConflictTag::DPIP:
      return conflicts_dpip_eps(*cf.orientation, cf.eps, r);
    case ConflictTag::PIP:
      return conflicts_ipip_eps(*cf.orientation, Epsilon::None, r) |
             conflicts_dpip_eps(*cf.orientation, Epsilon::None, r);
    case ConflictTag::INCOMP:
      return all_pairs(r.n()) & ~snake_pairs(*cf.orientation, r);
    case ConflictTag::PEP:
      return conflicts_ipip_eps(*cf.orientation, Epsilon::None, r) |
             conflicts_dpip_eps(*cf.orientation, Epsilon::None, r) |
             (all_pairs(r.n()) & ~snake_pairs(*cf.orientation, r));
  }
  throw domain_error("unknown conflict function");
}

std::optional<FamilyId> conflict_family(const ConflictFunctionId& cf) {
  switch (cf.tag) {
    case ConflictTag::IWOIP:
      return FamilyId::iwoip();
    case ConflictTag::DWOIP:
      return FamilyId::dwoip();
    case ConflictTag::WOIP:
      return FamilyId::woip();
    case ConflictTag::IPIP:
      return FamilyId::ipip(*cf.orientation, cf.eps);
    case ConflictTag::DPIP:
      return FamilyId::dpip(*cf.orientation, cf.eps);
    case ConflictTag::PIP:
      return FamilyId::pip(*cf.orientation);
    case ConflictTag::INCOMP:
      return std::nullopt;  // WOEP only at the empty orientation
    case ConflictTag::PEP:
      return FamilyId::pep(*cf.orientation);
  }
  return std::nullopt;
}

namespace detail {

std::vector<IntRelation> posets_by_filter(int n) {
  std::vector<IntRelation> out;
  const int m = pair_count(n);
  // Each strict pair is absent, increasing, or decreasing.
  std::vector<int> state(m, 0);
  for (;;) {
    PairMask inc = 0, dec = 0;
    for (int i = 0; i < m; ++i) {
      if (state[i] == 1) inc |= PairMask{1} << i;
      if (state[i] == 2) dec |= PairMask{1} << i;
    }
    IntRelation r = IntRelation::from_masks(n, inc, dec);
    if (is_transitive(r)) out.push_back(r);
    int i = 0;
    while (i < m && state[i] == 2) state[i++] = 0;
    if (i == m) break;
    ++state[i];
  }
  return out;
}

}  // namespace detail

namespace {

IntRelation restrict_to_interval(const IntRelation& r, int lo, int hi) {
  IntRelation out(r.n());
  for (int a = lo; a <= hi; ++a)
    for (int b = a + 1; b <= hi; ++b) {
      if (r.inc_contains(a, b)) out = out.with(a, b);
      if (r.dec_contains(a, b)) out = out.with(b, a);
    }
  return out;
}

IntRelation strip_conflicts(const IntRelation& r, PairMask conf) {
  return IntRelation::from_masks(r.n(), r.inc() & ~conf, r.dec() & ~conf);
}

std::string pair_text(const IntRelation& r, PairMask mask) {
  std::ostringstream out;
  out << to_text(r) << " conflicts {";
  bool first = true;
  for (int a = 1; a <= r.n(); ++a)
    for (int b = a + 1; b <= r.n(); ++b)
      if ((mask >> pair_index(r.n(), a, b)) & 1) {
        out << (first ? "" : ", ") << "{" << a << "," << b << "}";
        first = false;
      }
  out << "}";
  return out.str();
}

}  // namespace

ConflictPropertyReport conflict_properties(const ConflictFunctionId& cf, int n) {
  if (n > 4) throw domain_error("conflict_properties is exhaustive; n <= 4 only");
  ConflictPropertyReport rep;
  const auto posets = detail::posets_by_filter(n);

  std::vector<PairMask> confs;
  confs.reserve(posets.size());
  for (const auto& p : posets) confs.push_back(conflict_set(cf, p));

  for (std::size_t i = 0; i < posets.size(); ++i) {
    const IntRelation& p = posets[i];
    const PairMask conf = confs[i];

    if (rep.local.holds) {
      for (int a = 1; a <= n && rep.local.holds; ++a)
        for (int b = a + 1; b <= n; ++b) {
          const bool whole = (conf >> pair_index(n, a, b)) & 1;
          const bool local =
              (conflict_set(cf, restrict_to_interval(p, a, b)) >>
               pair_index(n, a, b)) &
              1;
          if (whole != local) {
            rep.local = {false, pair_text(p, conf)};
            break;
          }
        }
    }
    if (rep.increasing.holds && (conf & ~p.inc()))
      rep.increasing = {false, pair_text(p, conf)};
    if (rep.decreasing.holds && (conf & ~p.dec()))
      rep.decreasing = {false, pair_text(p, conf)};
    if (rep.incomparable.holds && (conf & (p.inc() | p.dec())))
      rep.incomparable = {false, pair_text(p, conf)};
    if (rep.consistent.holds) {
      if ((conf & p.inc()) != conflict_set(cf, p.inc_part()) ||
          (conf & p.dec()) != conflict_set(cf, p.dec_part()))
        rep.consistent = {false, pair_text(p, conf)};
    }
    if (rep.semitransitive.holds && !is_semitransitive(strip_conflicts(p, conf)))
      rep.semitransitive = {false, pair_text(p, conf)};
  }

  if (rep.monotone.holds) {
    for (std::size_t i = 0; i < posets.size() && rep.monotone.holds; ++i)
      for (std::size_t j = 0; j < posets.size(); ++j) {
        if (!is_subrelation(posets[i], posets[j])) continue;
        if (!is_subrelation(strip_conflicts(posets[i], confs[i]),
                            strip_conflicts(posets[j], confs[j]))) {
          rep.monotone = {false, to_text(posets[i]) + "  inside  " +
                                     to_text(posets[j])};
          break;
        }
      }
  }

  return rep;
}

}  // namespace intpos
