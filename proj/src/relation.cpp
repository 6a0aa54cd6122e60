#include "intpos/relation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace intpos {

IntRelation IntRelation::from_pairs(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  IntRelation r(n);
  for (auto [u, v] : pairs) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw domain_error("pair element outside [n]");
    if (u == v) throw domain_error("reflexive pairs are implicit, not stored");
    if (u < v)
      r.inc_ |= pair_bit(n, u, v);
    else
      r.dec_ |= pair_bit(n, v, u);
  }
  return r;
}

IntRelation IntRelation::full_increasing(int n) {
  IntRelation r(n);
  r.inc_ = all_pairs(n);
  return r;
}

IntRelation IntRelation::full_decreasing(int n) {
  IntRelation r(n);
  r.dec_ = all_pairs(n);
  return r;
}

IntRelation IntRelation::with(int u, int v) const {
  if (u == v) return *this;
  IntRelation r = *this;
  if (u < v)
    r.inc_ |= pair_bit(n_, u, v);
  else
    r.dec_ |= pair_bit(n_, v, u);
  return r;
}

IntRelation IntRelation::without(int u, int v) const {
  if (u == v) throw domain_error("reflexive pairs cannot be removed");
  IntRelation r = *this;
  if (u < v)
    r.inc_ &= ~pair_bit(n_, u, v);
  else
    r.dec_ &= ~pair_bit(n_, v, u);
  return r;
}

std::vector<std::pair<int, int>> IntRelation::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (inc_contains(a, b)) out.emplace_back(a, b);
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (dec_contains(a, b)) out.emplace_back(b, a);
  return out;
}

namespace detail {

Adjacency adjacency(const IntRelation& r) {
  Adjacency adj{};
  const int n = r.n();
  for (int u = 1; u <= n; ++u) adj[u] = Row(1) << (u - 1);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (r.inc_contains(a, b)) adj[a] |= Row(1) << (b - 1);
      if (r.dec_contains(a, b)) adj[b] |= Row(1) << (a - 1);
    }
  return adj;
}

IntRelation from_adjacency(int n, const Adjacency& adj) {
  PairMask inc = 0, dec = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if ((adj[a] >> (b - 1)) & 1) inc |= pair_bit(n, a, b);
      if ((adj[b] >> (a - 1)) & 1) dec |= pair_bit(n, a, b);
    }
  return IntRelation::from_masks(n, inc, dec);
}

}  // namespace detail

namespace {

bool adjacency_transitive(int n, const detail::Adjacency& adj) {
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (v != u && ((adj[u] >> (v - 1)) & 1) && (adj[v] & ~adj[u])) return false;
  return true;
}

}  // namespace

bool is_transitive(const IntRelation& r) {
  return adjacency_transitive(r.n(), detail::adjacency(r));
}

bool is_antisymmetric(const IntRelation& r) { return (r.inc() & r.dec()) == 0; }

bool is_semitransitive(const IntRelation& r) {
  return is_transitive(r.inc_part()) && is_transitive(r.dec_part());
}

bool is_poset(const IntRelation& r) {
  return is_antisymmetric(r) && is_transitive(r);
}

RelationClass classify(const IntRelation& r) {
  RelationClass c;
  c.symmetric = r.inc() == r.dec();
  c.antisymmetric = is_antisymmetric(r);
  c.transitive = is_transitive(r);
  c.semitransitive = is_semitransitive(r);
  c.poset = c.antisymmetric && c.transitive;
  c.increasing = r.dec() == 0;
  c.decreasing = r.inc() == 0;
  return c;
}

IntRelation transitive_closure(const IntRelation& r) {
  const int n = r.n();
  auto adj = detail::adjacency(r);
  // Repeated squaring of the boolean adjacency matrix until stable.
  for (;;) {
    detail::Adjacency next{};
    for (int u = 1; u <= n; ++u) {
      detail::Row row = adj[u];
      detail::Row acc = 0;
      while (row) {
        int v = __builtin_ctz(row) + 1;
        row &= row - 1;
        acc |= adj[v];
      }
      next[u] = acc;
    }
    if (next == adj) break;
    adj = next;
  }
  return detail::from_adjacency(n, adj);
}

IntRelation reverse(const IntRelation& r) {
  return IntRelation::from_masks(r.n(), r.dec(), r.inc());
}

IntRelation operator|(const IntRelation& r, const IntRelation& s) {
  require_same_size(r, s);
  return IntRelation::from_masks(r.n(), r.inc() | s.inc(), r.dec() | s.dec());
}

IntRelation operator&(const IntRelation& r, const IntRelation& s) {
  require_same_size(r, s);
  return IntRelation::from_masks(r.n(), r.inc() & s.inc(), r.dec() & s.dec());
}

IntRelation complement_of(const IntRelation& r) {
  const PairMask all = all_pairs(r.n());
  return IntRelation::from_masks(r.n(), ~r.inc() & all, ~r.dec() & all);
}

bool is_subrelation(const IntRelation& r, const IntRelation& s) {
  require_same_size(r, s);
  return (r.inc() & ~s.inc()) == 0 && (r.dec() & ~s.dec()) == 0;
}

void require_same_size(const IntRelation& r, const IntRelation& s) {
  if (r.n() != s.n())
    throw domain_error("relations live on ground sets of different sizes");
}

std::string to_text(const IntRelation& r) {
  std::ostringstream out;
  out << "n=" << r.n() << "; inc:";
  bool any = false;
  for (int a = 1; a <= r.n(); ++a)
    for (int b = a + 1; b <= r.n(); ++b)
      if (r.inc_contains(a, b)) {
        out << (any ? ", " : " ") << a << '<' << b;
        any = true;
      }
  if (!any) out << " -";
  out << "; dec:";
  any = false;
  for (int b = 2; b <= r.n(); ++b)
    for (int a = 1; a < b; ++a)
      if (r.dec_contains(a, b)) {
        out << (any ? ", " : " ") << b << '>' << a;
        any = true;
      }
  if (!any) out << " -";
  return out.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c))
      throw parse_error(std::string("expected '") + c + "' " + what);
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (s.substr(i, w.size()) != w)
      throw parse_error("expected '" + std::string(w) + "' in relation text");
    i += w.size();
  }
  int number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected a number in relation text");
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

}  // namespace

IntRelation parse_relation(std::string_view text) {
  Cursor c{text};
  c.expect_word("n");
  c.expect('=', "after 'n'");
  const int n = c.number();
  if (n < 1 || n > max_ground_size)
    throw parse_error("relation size out of range in text");
  c.expect(';', "after the size");
  c.expect_word("inc");
  c.expect(':', "after 'inc'");
  std::vector<std::pair<int, int>> pairs;
  if (!c.eat('-')) {
    for (;;) {
      int a = c.number();
      c.expect('<', "in an increasing pair");
      int b = c.number();
      if (!(a < b)) throw parse_error("increasing pair must satisfy a<b");
      pairs.emplace_back(a, b);
      if (!c.eat(',')) break;
    }
  }
  c.expect(';', "after the increasing pairs");
  c.expect_word("dec");
  c.expect(':', "after 'dec'");
  if (!c.eat('-')) {
    for (;;) {
      int b = c.number();
      c.expect('>', "in a decreasing pair");
      int a = c.number();
      if (!(a < b)) throw parse_error("decreasing pair must satisfy b>a");
      pairs.emplace_back(b, a);
      if (!c.eat(',')) break;
    }
  }
  if (!c.done()) throw parse_error("trailing characters after relation text");
  try {
    return IntRelation::from_pairs(n, pairs);
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace intpos
