#include "intpos/weak_order.hpp"

#include <cassert>

namespace intpos {

const char* level_name(Level level) {
  switch (level) {
    case Level::Rel:
      return "rel";
    case Level::Antisym:
      return "antisym";
    case Level::SemiTrans:
      return "semitrans";
    case Level::Trans:
      return "trans";
    case Level::Poset:
      return "poset";
  }
  return "?";
}

Level parse_level(std::string_view name) {
  if (name == "rel") return Level::Rel;
  if (name == "antisym") return Level::Antisym;
  if (name == "semitrans") return Level::SemiTrans;
  if (name == "trans") return Level::Trans;
  if (name == "poset") return Level::Poset;
  throw parse_error("unknown level '" + std::string(name) + "'");
}

bool in_carrier(Level level, const IntRelation& r) {
  switch (level) {
    case Level::Rel:
      return true;
    case Level::Antisym:
      return is_antisymmetric(r);
    case Level::SemiTrans:
      return is_semitransitive(r);
    case Level::Trans:
      return is_transitive(r);
    case Level::Poset:
      return is_poset(r);
  }
  return false;
}

void require_carrier(Level level, const IntRelation& r) {
  if (!in_carrier(level, r))
    throw domain_error(std::string("relation is not in the '") +
                       level_name(level) + "' carrier");
}

namespace {

// Bit rows over [n]: sources[v] = {u : u R v}, targets[u] = {v : u R v},
// diagonal included.
struct Rows {
  detail::Adjacency out;  // out[u] = {v : u R v}
  detail::Adjacency in;   // in[v]  = {u : u R v}
};

Rows rows_of(const IntRelation& r) {
  Rows rows;
  rows.out = detail::adjacency(r);
  rows.in = detail::Adjacency{};
  for (int u = 1; u <= r.n(); ++u) {
    detail::Row row = rows.out[u];
    while (row) {
      int v = __builtin_ctz(row) + 1;
      row &= row - 1;
      rows.in[v] |= detail::Row(1) << (u - 1);
    }
  }
  return rows;
}

constexpr detail::Row below_or_equal(int b) {
  return static_cast<detail::Row>((1u << b) - 1);  // {1..b}
}

constexpr detail::Row above_or_equal(int a, int n) {
  return static_cast<detail::Row>(((1u << n) - 1) & ~((1u << (a - 1)) - 1));
}

}  // namespace

IntRelation tdd(const IntRelation& r) {
  const int n = r.n();
  const Rows rows = rows_of(r);
  IntRelation out = r;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (!r.dec_contains(a, b)) continue;  // stored pair is (b,a)
      const detail::Row is = rows.in[b] & below_or_equal(b);
      const detail::Row js = rows.out[a] & above_or_equal(a, n);
      bool deleted = false;
      detail::Row iw = is;
      while (iw && !deleted) {
        int i = __builtin_ctz(iw) + 1;
        iw &= iw - 1;
        if (js & ~rows.out[i]) deleted = true;  // some j >= a with i !R j
      }
      if (deleted) out = out.without(b, a);
    }
  return out;
}

IntRelation tid(const IntRelation& r) {
  const int n = r.n();
  const Rows rows = rows_of(r);
  IntRelation out = r;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (!r.inc_contains(a, b)) continue;
      const detail::Row is = rows.in[a] & above_or_equal(a, n);
      const detail::Row js = rows.out[b] & below_or_equal(b);
      bool deleted = false;
      detail::Row iw = is;
      while (iw && !deleted) {
        int i = __builtin_ctz(iw) + 1;
        iw &= iw - 1;
        if (js & ~rows.out[i]) deleted = true;
      }
      if (deleted) out = out.without(a, b);
    }
  return out;
}

namespace {

IntRelation raw_meet(const IntRelation& r, const IntRelation& s) {
  return IntRelation::from_masks(r.n(), r.inc() | s.inc(), r.dec() & s.dec());
}

IntRelation raw_join(const IntRelation& r, const IntRelation& s) {
  return IntRelation::from_masks(r.n(), r.inc() & s.inc(), r.dec() | s.dec());
}

IntRelation st_meet(const IntRelation& r, const IntRelation& s) {
  IntRelation inc = transitive_closure(
      IntRelation::from_masks(r.n(), r.inc() | s.inc(), 0));
  return IntRelation::from_masks(r.n(), inc.inc(), r.dec() & s.dec());
}

IntRelation st_join(const IntRelation& r, const IntRelation& s) {
  IntRelation dec = transitive_closure(
      IntRelation::from_masks(r.n(), 0, r.dec() | s.dec()));
  return IntRelation::from_masks(r.n(), r.inc() & s.inc(), dec.dec());
}

}  // namespace

IntRelation meet(Level level, const IntRelation& r, const IntRelation& s) {
  require_same_size(r, s);
  require_carrier(level, r);
  require_carrier(level, s);
  IntRelation out(r.n());
  switch (level) {
    case Level::Rel:
    case Level::Antisym:
      out = raw_meet(r, s);
      break;
    case Level::SemiTrans:
      out = st_meet(r, s);
      break;
    case Level::Trans:
    case Level::Poset:
      out = tdd(st_meet(r, s));
      break;
  }
  assert(in_carrier(level, out));
  return out;
}

IntRelation join(Level level, const IntRelation& r, const IntRelation& s) {
  require_same_size(r, s);
  require_carrier(level, r);
  require_carrier(level, s);
  IntRelation out(r.n());
  switch (level) {
    case Level::Rel:
    case Level::Antisym:
      out = raw_join(r, s);
      break;
    case Level::SemiTrans:
      out = st_join(r, s);
      break;
    case Level::Trans:
    case Level::Poset:
      out = tid(st_join(r, s));
      break;
  }
  assert(in_carrier(level, out));
  return out;
}

std::vector<IntRelation> covers(Level level, const IntRelation& r) {
  if (level == Level::Trans)
    throw domain_error(
        "no closed-form cover description for transitive relations; use the "
        "enumeration oracle");
  require_carrier(level, r);
  const int n = r.n();
  std::vector<IntRelation> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      // Deleting an increasing pair moves up.
      if (r.inc_contains(a, b)) {
        bool ok = true;
        switch (level) {
          case Level::Rel:
          case Level::Antisym:
            break;
          case Level::SemiTrans:
            for (int i = a + 1; i < b && ok; ++i)
              if (r.contains(a, i) && r.contains(i, b)) ok = false;
            break;
          case Level::Poset:
            for (int i = 1; i <= n && ok; ++i)
              if (i != a && i != b && r.contains(a, i) && r.contains(i, b))
                ok = false;
            break;
          default:
            break;
        }
        if (ok) out.push_back(r.without(a, b));
      }
      // Adding a decreasing pair moves up.
      if (!r.dec_contains(a, b)) {
        bool ok = true;
        switch (level) {
          case Level::Rel:
            break;
          case Level::Antisym:
            ok = !r.inc_contains(a, b);
            break;
          case Level::SemiTrans:
            for (int i = 1; i < a && ok; ++i)
              if (r.contains(a, i) && !r.contains(b, i)) ok = false;
            for (int j = b + 1; j <= n && ok; ++j)
              if (r.contains(j, b) && !r.contains(j, a)) ok = false;
            break;
          case Level::Poset:
            ok = !r.inc_contains(a, b);
            for (int i = 1; i <= n && ok; ++i)
              if (i != a && r.contains(a, i) && !r.contains(b, i)) ok = false;
            for (int j = 1; j <= n && ok; ++j)
              if (j != b && r.contains(j, b) && !r.contains(j, a)) ok = false;
            break;
          default:
            break;
        }
        if (ok) out.push_back(r.with(b, a));
      }
    }
  return out;
}

}  // namespace intpos
