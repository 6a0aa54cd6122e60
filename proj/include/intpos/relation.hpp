#ifndef INTPOS_RELATION_HPP
#define INTPOS_RELATION_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace intpos {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A strict pair (a,b) with 1 <= a < b <= n occupies one bit of a PairMask,
// in lexicographic order on (a,b).
using PairMask = std::uint64_t;

// Ground sets up to [11] keep both directions inside one 64-bit word each.
inline constexpr int max_ground_size = 11;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

constexpr int pair_index(int n, int a, int b) {
  return (a - 1) * n - a * (a - 1) / 2 + b - a - 1;
}

constexpr PairMask pair_bit(int n, int a, int b) {
  return PairMask{1} << pair_index(n, a, b);
}

constexpr PairMask all_pairs(int n) {
  return pair_count(n) == 64 ? ~PairMask{0}
                             : (PairMask{1} << pair_count(n)) - 1;
}

/// A reflexive binary relation on [n] = {1,...,n}, stored as its strict
/// increasing pairs (a,b) and strict decreasing pairs (b,a), a < b.
/// Reflexive pairs (i,i) are implicit and never stored. Values are immutable;
/// every operation returns a new relation.
class IntRelation {
 public:
  explicit IntRelation(int n) : n_(checked_size(n)), inc_(0), dec_(0) {}

  static IntRelation from_masks(int n, PairMask inc, PairMask dec) {
    IntRelation r(n);
    if ((inc | dec) & ~all_pairs(n))
      throw domain_error("relation mask has bits outside the pair range");
    r.inc_ = inc;
    r.dec_ = dec;
    return r;
  }

  // Any list of (u,v) pairs with u != v; (u,u) entries are rejected since
  // reflexive pairs are implicit.
  static IntRelation from_pairs(int n,
                                const std::vector<std::pair<int, int>>& pairs);

  // I_n = {(a,b) : a <= b} and D_n = {(b,a) : a <= b}, strict parts stored.
  static IntRelation full_increasing(int n);
  static IntRelation full_decreasing(int n);

  int n() const { return n_; }
  PairMask inc() const { return inc_; }
  PairMask dec() const { return dec_; }

  int inc_size() const { return __builtin_popcountll(inc_); }
  int dec_size() const { return __builtin_popcountll(dec_); }

  // u R v, with the reflexive pairs treated as present.
  bool contains(int u, int v) const {
    if (u == v) return true;
    return u < v ? (inc_ >> pair_index(n_, u, v)) & 1
                 : (dec_ >> pair_index(n_, v, u)) & 1;
  }
  bool inc_contains(int a, int b) const {
    return (inc_ >> pair_index(n_, a, b)) & 1;
  }
  bool dec_contains(int a, int b) const {
    return (dec_ >> pair_index(n_, a, b)) & 1;
  }

  IntRelation with(int u, int v) const;
  IntRelation without(int u, int v) const;

  IntRelation inc_part() const { return from_masks(n_, inc_, 0); }
  IntRelation dec_part() const { return from_masks(n_, 0, dec_); }

  // All strict pairs (u,v) with u R v, increasing pairs first, each side in
  // lexicographic storage order.
  std::vector<std::pair<int, int>> strict_pairs() const;

  bool operator==(const IntRelation& o) const {
    return n_ == o.n_ && inc_ == o.inc_ && dec_ == o.dec_;
  }
  bool operator!=(const IntRelation& o) const { return !(*this == o); }

 private:
  static int checked_size(int n) {
    if (n < 1) throw domain_error("relation size must be at least 1");
    if (n > max_ground_size)
      throw domain_error("relation size exceeds the supported maximum of 11");
    return n;
  }

  int n_;
  PairMask inc_;
  PairMask dec_;
};

struct RelationClass {
  bool reflexive = true;
  bool symmetric = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool semitransitive = false;
  bool poset = false;
  bool increasing = false;
  bool decreasing = false;
};

RelationClass classify(const IntRelation& r);

bool is_transitive(const IntRelation& r);
bool is_antisymmetric(const IntRelation& r);
bool is_semitransitive(const IntRelation& r);
bool is_poset(const IntRelation& r);

// Coarsest transitive relation containing r.
IntRelation transitive_closure(const IntRelation& r);

// (u,v) in reverse(r) iff (v,u) in r.
IntRelation reverse(const IntRelation& r);

// Set operations on strict pairs; the complement keeps reflexive pairs
// implicit: complement(r) = {(u,v) : u = v or (u,v) not in r}.
IntRelation operator|(const IntRelation& r, const IntRelation& s);
IntRelation operator&(const IntRelation& r, const IntRelation& s);
IntRelation complement_of(const IntRelation& r);

// r subseteq s on strict pairs (the extension order).
bool is_subrelation(const IntRelation& r, const IntRelation& s);

// Text format, bit-exact under round trips:
//   n=4; inc: 1<2, 2<3; dec: 3>1, 4>1, 4>3
// Pair lists are comma separated, whitespace-insensitive, `-` when empty.
std::string to_text(const IntRelation& r);
IntRelation parse_relation(std::string_view text);

void require_same_size(const IntRelation& r, const IntRelation& s);

namespace detail {

// Row u (1-based) has bit (v-1) set when u R v; the diagonal is set.
using Row = std::uint16_t;
using Adjacency = std::array<Row, max_ground_size + 1>;

Adjacency adjacency(const IntRelation& r);
IntRelation from_adjacency(int n, const Adjacency& adj);

}  // namespace detail

}  // namespace intpos

#endif
