#ifndef INTPOS_PERMS_HPP
#define INTPOS_PERMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "intpos/relation.hpp"

namespace intpos {

/// A permutation of [n] in one-line notation sigma(1)...sigma(n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);  // [n, n-1, ..., 1]

  int n() const { return static_cast<int>(word_.size()); }
  int at(int position) const { return word_[position - 1]; }       // sigma(i)
  int position_of(int value) const { return inverse_[value - 1]; }  // sigma^-1
  const std::vector<int>& word() const { return word_; }

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator!=(const Permutation& o) const { return word_ != o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

// One-line digit string for n <= 9, comma-separated values otherwise.
std::string to_text(const Permutation& p);
Permutation parse_permutation(std::string_view text);

std::vector<Permutation> all_permutations(int n);

// ver(sigma) = {(a,b) : a<b, a before b} and inv(sigma) = {(b,a) : a<b, b
// before a}, returned as their strict pair lists in storage order.
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
versions_inversions(const Permutation& p);

// The total order sigma(1) < ... < sigma(n) as an integer poset; its
// increasing part is ver(sigma) and its decreasing part is inv(sigma).
IntRelation chain_poset(const Permutation& p);

// Inverse of chain_poset; requires a total order.
Permutation permutation_of_chain(const IntRelation& total_order);

// Weak order on S(n): inclusion of inversion sets.
bool perm_leq(const Permutation& s, const Permutation& t);

// Meet and join of the weak order on S(n), computed through the poset meet
// of the corresponding chains (WOEP is a sublattice of IPos).
Permutation perm_meet(const Permutation& s, const Permutation& t);
Permutation perm_join(const Permutation& s, const Permutation& t);

/// A weak order interval [lo, hi], lo <= hi required.
struct WOInterval {
  Permutation lo;
  Permutation hi;

  WOInterval(Permutation lo_, Permutation hi_);
};

// Inc(chain hi) | Dec(chain lo); its linear extensions are exactly [lo, hi].
IntRelation interval_poset(const WOInterval& iv);

/// An ordered partition of [n]; block order is significant.
class OrderedPartition {
 public:
  explicit OrderedPartition(std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int value) const { return block_of_[value - 1]; }

  bool operator==(const OrderedPartition& o) const {
    return blocks_ == o.blocks_;
  }
  bool operator<(const OrderedPartition& o) const { return blocks_ < o.blocks_; }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;  // each block sorted ascending
  std::vector<int> block_of_;
};

// Blocks of sorted digits joined by '|' (e.g. "125|37|46"); comma-separated
// values inside blocks for n >= 10.
std::string to_text(const OrderedPartition& p);
OrderedPartition parse_partition(std::string_view text);

std::vector<OrderedPartition> all_ordered_partitions(int n);

// u < v iff the block of u comes strictly before the block of v.
IntRelation partition_poset(const OrderedPartition& p);

// Inverse of partition_poset; requires a WOFP member.
OrderedPartition partition_of_poset(const IntRelation& r);

// All linear extensions of a poset, lexicographically sorted.
std::vector<Permutation> linear_extensions(const IntRelation& poset);

// Weak order minimal/maximal linear extension, by saturating incomparable
// pairs: maxle adds (b,a) for every incomparable a<b, minle adds (a,b).
// maxle requires an IWOIP member, minle a DWOIP member.
Permutation minle(const IntRelation& poset);
Permutation maxle(const IntRelation& poset);

// Upper covers of p in the pseudo-permutahedron (facial weak) order: merge
// two adjacent blocks with max(B_i) < min(B_{i+1}), or split one block into
// upper|lower halves.
std::vector<OrderedPartition> facial_covers(const OrderedPartition& p);

}  // namespace intpos

#endif
