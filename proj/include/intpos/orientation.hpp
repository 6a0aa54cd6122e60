#ifndef INTPOS_ORIENTATION_HPP
#define INTPOS_ORIENTATION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "intpos/relation.hpp"

namespace intpos {

/// The orientation (n, O+, O-) parameterizing permutree families. The two
/// sets may intersect and may be empty.
struct Orientation {
  int n = 0;
  std::uint16_t up = 0;    // O+, bit (v-1) set when v is overlined
  std::uint16_t down = 0;  // O-, bit (v-1) set when v is underlined

  Orientation() = default;
  Orientation(int n_, std::uint16_t up_, std::uint16_t down_);
  Orientation(int n_, std::initializer_list<int> up_,
              std::initializer_list<int> down_);

  bool in_up(int v) const { return (up >> (v - 1)) & 1; }
  bool in_down(int v) const { return (down >> (v - 1)) & 1; }

  // {2,...,n-1} subseteq O+ u O-.
  bool covering() const;

  static Orientation weak(int n) { return Orientation(n, 0, 0); }   // (n,0,0)
  static Orientation tamari(int n);                                  // (n,0,[n])
  static Orientation boolean(int n);                                 // (n,[n],[n])

  bool operator==(const Orientation& o) const {
    return n == o.n && up == o.up && down == o.down;
  }
};

// Text format: `n=<k>; up: a,b,...; down: c,d,...`, empty lists written `-`.
std::string to_text(const Orientation& o);
Orientation parse_orientation(std::string_view text);

// All 4^n orientations of [n], up mask major.
std::vector<Orientation> all_orientations(int n);

}  // namespace intpos

#endif
