#include "intpos/perms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "intpos/families.hpp"
#include "intpos/weak_order.hpp"

namespace intpos {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1 || n > max_ground_size)
    throw domain_error("permutation size out of range");
  inverse_.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    int v = word_[i - 1];
    if (v < 1 || v > n || inverse_[v - 1] != 0)
      throw domain_error("permutation word is not a bijection on [n]");
    inverse_[v - 1] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

std::string to_text(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.n(); ++i) {
    if (p.n() > 9 && i > 1) out << ',';
    out << p.at(i);
  }
  return out.str();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
      if (i >= text.size()) break;
      int v = 0;
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("malformed permutation text");
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      w.push_back(v);
    }
  } else {
    for (char c : text) {
      if (c == ' ') continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw parse_error("malformed permutation text");
      w.push_back(c - '0');
    }
  }
  if (w.empty()) throw parse_error("empty permutation text");
  try {
    return Permutation(std::move(w));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>
versions_inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> ver, inv;
  for (int a = 1; a <= p.n(); ++a)
    for (int b = a + 1; b <= p.n(); ++b) {
      if (p.position_of(a) < p.position_of(b))
        ver.emplace_back(a, b);
      else
        inv.emplace_back(b, a);
    }
  return {ver, inv};
}

IntRelation chain_poset(const Permutation& p) {
  IntRelation r(p.n());
  for (int a = 1; a <= p.n(); ++a)
    for (int b = a + 1; b <= p.n(); ++b) {
      if (p.position_of(a) < p.position_of(b))
        r = r.with(a, b);
      else
        r = r.with(b, a);
    }
  return r;
}

Permutation permutation_of_chain(const IntRelation& r) {
  const int n = r.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!r.inc_contains(a, b) && !r.dec_contains(a, b))
        throw domain_error("relation is not a total order");
  if (!is_poset(r)) throw domain_error("relation is not a total order");
  std::vector<int> word(n);
  for (int u = 1; u <= n; ++u) {
    int before = 0;
    for (int v = 1; v <= n; ++v)
      if (v != u && r.contains(v, u)) ++before;
    word[before] = u;
  }
  return Permutation(std::move(word));
}

bool perm_leq(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n()) throw domain_error("permutations of different sizes");
  const int n = s.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (s.position_of(a) > s.position_of(b) &&
          t.position_of(a) < t.position_of(b))
        return false;  // inversion of s missing from t
  return true;
}

Permutation perm_meet(const Permutation& s, const Permutation& t) {
  return permutation_of_chain(
      meet(Level::Poset, chain_poset(s), chain_poset(t)));
}

Permutation perm_join(const Permutation& s, const Permutation& t) {
  return permutation_of_chain(
      join(Level::Poset, chain_poset(s), chain_poset(t)));
}

WOInterval::WOInterval(Permutation lo_, Permutation hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!perm_leq(lo, hi))
    throw domain_error("interval endpoints are not weak-order comparable");
}

IntRelation interval_poset(const WOInterval& iv) {
  const IntRelation lo = chain_poset(iv.lo);
  const IntRelation hi = chain_poset(iv.hi);
  return IntRelation::from_masks(lo.n(), hi.inc(), lo.dec());
}

OrderedPartition::OrderedPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  int count = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw domain_error("ordered partition with an empty block");
    std::sort(b.begin(), b.end());
    count += static_cast<int>(b.size());
  }
  n_ = count;
  if (n_ < 1 || n_ > max_ground_size)
    throw domain_error("ordered partition size out of range");
  block_of_.assign(n_, 0);
  for (int i = 0; i < static_cast<int>(blocks_.size()); ++i)
    for (int v : blocks_[i]) {
      if (v < 1 || v > n_ || block_of_[v - 1] != 0)
        throw domain_error("blocks do not partition [n]");
      block_of_[v - 1] = i + 1;
    }
}

std::string to_text(const OrderedPartition& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    if (i) out << '|';
    const auto& b = p.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (p.n() > 9 && j) out << ',';
      out << b[j];
    }
  }
  return out.str();
}

OrderedPartition parse_partition(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  int pending = -1;
  auto flush_pending = [&] {
    if (pending >= 0) cur.push_back(pending);
    pending = -1;
  };
  bool comma_mode = text.find(',') != std::string_view::npos;
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '|') {
      flush_pending();
      if (cur.empty()) throw parse_error("empty block in partition text");
      blocks.push_back(cur);
      cur.clear();
    } else if (c == ',') {
      flush_pending();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (comma_mode)
        pending = (pending < 0 ? 0 : pending * 10) + (c - '0');
      else
        cur.push_back(c - '0');
    } else {
      throw parse_error("malformed partition text");
    }
  }
  flush_pending();
  if (cur.empty()) throw parse_error("empty block in partition text");
  blocks.push_back(cur);
  try {
    return OrderedPartition(std::move(blocks));
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

std::vector<OrderedPartition> all_ordered_partitions(int n) {
  // Grow element by element: n is appended to an existing block or inserted
  // as a new singleton block in any position.
  std::vector<std::vector<std::vector<int>>> acc = {{{1}}};
  for (int v = 2; v <= n; ++v) {
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& blocks : acc) {
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto grown = blocks;
        grown[i].push_back(v);
        next.push_back(std::move(grown));
      }
      for (std::size_t i = 0; i <= blocks.size(); ++i) {
        auto grown = blocks;
        grown.insert(grown.begin() + i, {v});
        next.push_back(std::move(grown));
      }
    }
    acc = std::move(next);
  }
  std::vector<OrderedPartition> out;
  out.reserve(acc.size());
  for (auto& blocks : acc) out.push_back(OrderedPartition(std::move(blocks)));
  std::sort(out.begin(), out.end());
  return out;
}

IntRelation partition_poset(const OrderedPartition& p) {
  IntRelation r(p.n());
  for (int u = 1; u <= p.n(); ++u)
    for (int v = 1; v <= p.n(); ++v)
      if (u != v && p.block_of(u) < p.block_of(v)) r = r.with(u, v);
  return r;
}

OrderedPartition partition_of_poset(const IntRelation& r) {
  if (!is_member(FamilyId::wofp(), r))
    throw domain_error("relation is not a weak order face poset");
  const int n = r.n();
  std::vector<std::vector<int>> blocks;
  std::uint16_t remaining = std::uint16_t((1u << n) - 1);
  while (remaining) {
    std::vector<int> block;
    for (int u = 1; u <= n; ++u) {
      if (!((remaining >> (u - 1)) & 1)) continue;
      bool minimal = true;
      for (int v = 1; v <= n && minimal; ++v)
        if (v != u && ((remaining >> (v - 1)) & 1) && r.contains(v, u))
          minimal = false;
      if (minimal) block.push_back(u);
    }
    for (int u : block) remaining &= ~std::uint16_t(1u << (u - 1));
    blocks.push_back(std::move(block));
  }
  OrderedPartition p(std::move(blocks));
  if (partition_poset(p) != r)
    throw domain_error("relation is not a weak order face poset");
  return p;
}

namespace {

void extend(const IntRelation& r, std::uint16_t used, std::vector<int>& prefix,
            std::vector<Permutation>& out) {
  const int n = r.n();
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Permutation(prefix));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if ((used >> (v - 1)) & 1) continue;
    bool minimal = true;
    for (int u = 1; u <= n && minimal; ++u)
      if (u != v && !((used >> (u - 1)) & 1) && r.contains(u, v))
        minimal = false;
    if (!minimal) continue;
    prefix.push_back(v);
    extend(r, std::uint16_t(used | (1u << (v - 1))), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Permutation> linear_extensions(const IntRelation& poset) {
  if (!is_poset(poset)) throw domain_error("linear extensions require a poset");
  std::vector<Permutation> out;
  std::vector<int> prefix;
  extend(poset, 0, prefix, out);
  // Minimal values tried in increasing order, so emission is already
  // lexicographic; keep the contract explicit.
  std::sort(out.begin(), out.end());
  return out;
}

Permutation maxle(const IntRelation& poset) {
  if (!is_member(FamilyId::iwoip(), poset))
    throw domain_error("maxle requires an IWOIP member");
  IntRelation total = poset;
  for (int a = 1; a <= poset.n(); ++a)
    for (int b = a + 1; b <= poset.n(); ++b)
      if (!poset.inc_contains(a, b) && !poset.dec_contains(a, b))
        total = total.with(b, a);
  return permutation_of_chain(total);
}

Permutation minle(const IntRelation& poset) {
  if (!is_member(FamilyId::dwoip(), poset))
    throw domain_error("minle requires a DWOIP member");
  IntRelation total = poset;
  for (int a = 1; a <= poset.n(); ++a)
    for (int b = a + 1; b <= poset.n(); ++b)
      if (!poset.inc_contains(a, b) && !poset.dec_contains(a, b))
        total = total.with(a, b);
  return permutation_of_chain(total);
}

std::vector<OrderedPartition> facial_covers(const OrderedPartition& p) {
  std::vector<OrderedPartition> out;
  const auto& blocks = p.blocks();
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (blocks[i].back() < blocks[i + 1].front()) {
      auto merged = blocks;
      merged[i].insert(merged[i].end(), merged[i + 1].begin(),
                       merged[i + 1].end());
      merged.erase(merged.begin() + i + 1);
      out.push_back(OrderedPartition(std::move(merged)));
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t k = 1; k < blocks[i].size(); ++k) {
      // Split into upper | lower halves (blocks are sorted ascending).
      std::vector<int> low(blocks[i].begin(), blocks[i].begin() + k);
      std::vector<int> high(blocks[i].begin() + k, blocks[i].end());
      auto split = blocks;
      split[i] = std::move(high);
      split.insert(split.begin() + i + 1, std::move(low));
      out.push_back(OrderedPartition(std::move(split)));
    }
  }
  return out;
}

}  // namespace intpos
