#include "intpos/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "intpos/perms.hpp"
#include "intpos/projections.hpp"

namespace intpos {

namespace {

bool canonical_less(const IntRelation& a, const IntRelation& b) {
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.inc() != b.inc()) return a.inc() < b.inc();
  return a.dec() < b.dec();
}

void budget(bool ok, const char* what) {
  if (!ok)
    throw domain_error(std::string("enumeration budget exceeded for ") + what);
}

std::vector<IntRelation> all_relations(int n) {
  const int m = pair_count(n);
  std::vector<IntRelation> out;
  out.reserve(std::size_t(1) << (2 * m));
  for (PairMask inc = 0; inc < (PairMask{1} << m); ++inc)
    for (PairMask dec = 0; dec < (PairMask{1} << m); ++dec)
      out.push_back(IntRelation::from_masks(n, inc, dec));
  return out;
}

std::vector<IntRelation> antisym_relations(int n) {
  std::vector<IntRelation> out;
  const int m = pair_count(n);
  std::vector<int> state(m, 0);
  for (;;) {
    PairMask inc = 0, dec = 0;
    for (int i = 0; i < m; ++i) {
      if (state[i] == 1) inc |= PairMask{1} << i;
      if (state[i] == 2) dec |= PairMask{1} << i;
    }
    out.push_back(IntRelation::from_masks(n, inc, dec));
    int i = 0;
    while (i < m && state[i] == 2) state[i++] = 0;
    if (i == m) break;
    ++state[i];
  }
  return out;
}

// Posets on [n] from posets on [n-1]: attach element n below an up-closed
// set and above a down-closed set with every down element related to every
// up element.
std::vector<IntRelation> extend_posets(const std::vector<IntRelation>& base,
                                       int n) {
  std::vector<IntRelation> out;
  const int k = n - 1;
  for (const auto& p : base) {
    for (std::uint32_t below = 0; below < (1u << k); ++below) {
      // below: x with x < n in the new poset (x "precedes" n).
      bool ok = true;
      for (int x = 1; x <= k && ok; ++x) {
        if (!((below >> (x - 1)) & 1)) continue;
        for (int y = 1; y <= k; ++y)
          if (y != x && p.contains(y, x) && !((below >> (y - 1)) & 1)) {
            ok = false;
            break;
          }
      }
      if (!ok) continue;
      for (std::uint32_t above = 0; above < (1u << k); ++above) {
        if (above & below) continue;
        bool good = true;
        for (int x = 1; x <= k && good; ++x) {
          if (!((above >> (x - 1)) & 1)) continue;
          for (int y = 1; y <= k; ++y)
            if (y != x && p.contains(x, y) && !((above >> (y - 1)) & 1)) {
              good = false;
              break;
            }
        }
        // Transitivity through n: below x, above y forces x before y.
        for (int x = 1; x <= k && good; ++x) {
          if (!((below >> (x - 1)) & 1)) continue;
          for (int y = 1; y <= k; ++y)
            if (((above >> (y - 1)) & 1) && !p.contains(x, y)) {
              good = false;
              break;
            }
        }
        if (!good) continue;
        IntRelation q = IntRelation::from_masks(n, 0, 0);
        for (int a = 1; a <= k; ++a)
          for (int b = a + 1; b <= k; ++b) {
            if (p.inc_contains(a, b)) q = q.with(a, b);
            if (p.dec_contains(a, b)) q = q.with(b, a);
          }
        for (int x = 1; x <= k; ++x) {
          if ((below >> (x - 1)) & 1) q = q.with(x, n);
          if ((above >> (x - 1)) & 1) q = q.with(n, x);
        }
        out.push_back(q);
      }
    }
  }
  return out;
}

const std::vector<IntRelation>& cached_posets(int n) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<IntRelation>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<IntRelation> posets;
  if (auto loaded = load_universe_cache("poset", n)) {
    posets = std::move(*loaded);
  } else if (n <= 4) {
    posets = detail::posets_by_filter(n);
  } else {
    posets = extend_posets(cached_posets(n - 1), n);
    canonical_sort(posets);
    store_universe_cache("poset", n, posets);
  }
  canonical_sort(posets);
  return cache.emplace(n, std::move(posets)).first->second;
}

}  // namespace

void canonical_sort(std::vector<IntRelation>& universe) {
  std::sort(universe.begin(), universe.end(), canonical_less);
}

std::vector<IntRelation> enumerate_level(Level level, int n) {
  std::vector<IntRelation> out;
  switch (level) {
    case Level::Rel:
      budget(n <= 3, "all relations");
      out = all_relations(n);
      break;
    case Level::SemiTrans:
    case Level::Trans:
      budget(n <= 3, "semitransitive/transitive relations");
      for (const auto& r : all_relations(n))
        if (in_carrier(level, r)) out.push_back(r);
      break;
    case Level::Antisym:
      budget(n <= 5, "antisymmetric relations");
      out = antisym_relations(n);
      break;
    case Level::Poset:
      budget(n <= 5, "posets");
      out = cached_posets(n);
      break;
  }
  canonical_sort(out);
  return out;
}

std::vector<IntRelation> enumerate_family(const FamilyId& f, int n) {
  if (f.orientation && f.orientation->n != n)
    throw domain_error("family orientation size differs from n");
  const bool element_family =
      f.tag == FamilyTag::WOEP || f.tag == FamilyTag::PEP;
  budget(n <= 5 || (element_family && n <= 6), family_name(f).c_str());

  std::vector<IntRelation> out;
  if (n <= 5) {
    for (const auto& p : cached_posets(n))
      if (is_member(f, p)) out.push_back(p);
  } else if (f.tag == FamilyTag::WOEP) {
    for (const auto& s : all_permutations(n)) out.push_back(chain_poset(s));
  } else {
    // PEP at n = 6: the insertion fibers partition S(n).
    std::set<std::pair<PairMask, PairMask>> seen;
    for (const auto& s : all_permutations(n)) {
      IntRelation t = insert_permutree(*f.orientation, s);
      if (seen.insert({t.inc(), t.dec()}).second) out.push_back(t);
    }
  }
  canonical_sort(out);
  return out;
}

CountTable count_table(int n_max) {
  if (n_max > 5) throw domain_error("count_table supports n <= 5");
  CountTable table;
  table.n_max = n_max;
  const std::vector<std::pair<std::string, std::function<FamilyId(int)>>> rows =
      {
          {"WOEP", [](int) { return FamilyId::woep(); }},
          {"TOEP", [](int n) { return FamilyId::pep(Orientation::tamari(n)); }},
          {"BOEP", [](int n) { return FamilyId::pep(Orientation::boolean(n)); }},
          {"WOIP", [](int) { return FamilyId::woip(); }},
          {"TOIP", [](int n) { return FamilyId::pip(Orientation::tamari(n)); }},
          {"BOIP", [](int n) { return FamilyId::pip(Orientation::boolean(n)); }},
          {"WOFP", [](int) { return FamilyId::wofp(); }},
          {"TOFP", [](int n) { return FamilyId::pfp(Orientation::tamari(n)); }},
          {"BOFP", [](int n) { return FamilyId::pfp(Orientation::boolean(n)); }},
      };
  for (const auto& [name, make] : rows) {
    std::vector<long long> counts;
    for (int n = 1; n <= n_max; ++n)
      counts.push_back(
          static_cast<long long>(enumerate_family(make(n), n).size()));
    table.rows.emplace_back(name, std::move(counts));
  }
  return table;
}

namespace {

std::optional<IntRelation> brute_bound(const std::vector<IntRelation>& universe,
                                       const LeqFn& leq, const IntRelation& r,
                                       const IntRelation& s, bool lower) {
  std::vector<const IntRelation*> bounds;
  for (const auto& t : universe)
    if (lower ? (leq(t, r) && leq(t, s)) : (leq(r, t) && leq(s, t)))
      bounds.push_back(&t);
  if (bounds.empty()) return std::nullopt;
  const IntRelation* best = bounds.front();
  for (const auto* t : bounds)
    if (lower ? leq(*best, *t) : leq(*t, *best)) best = t;
  for (const auto* t : bounds)
    if (!(lower ? leq(*t, *best) : leq(*best, *t))) return std::nullopt;
  return *best;
}

}  // namespace

std::optional<IntRelation> brute_meet(const std::vector<IntRelation>& universe,
                                      const LeqFn& leq, const IntRelation& r,
                                      const IntRelation& s) {
  return brute_bound(universe, leq, r, s, true);
}

std::optional<IntRelation> brute_join(const std::vector<IntRelation>& universe,
                                      const LeqFn& leq, const IntRelation& r,
                                      const IntRelation& s) {
  return brute_bound(universe, leq, r, s, false);
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<IntRelation>& universe, const LeqFn& leq) {
  // Requires leq to be strictly rank-monotone (true for the weak order):
  // scanning candidates by rank lets accepted covers screen later ones.
  std::vector<std::size_t> order(universe.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(universe[a], universe[b]);
  });
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i : order) {
    std::vector<std::size_t> covers_of_i;
    for (std::size_t j : order) {
      if (i == j) continue;
      if (!(leq(universe[i], universe[j]) && universe[i] != universe[j]))
        continue;
      bool covered = false;
      for (std::size_t c : covers_of_i)
        if (leq(universe[c], universe[j]) && universe[c] != universe[j]) {
          covered = true;
          break;
        }
      if (!covered) covers_of_i.push_back(j);
    }
    for (std::size_t j : covers_of_i) edges.emplace_back(i, j);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

LatticeReport check_lattice(const std::vector<IntRelation>& universe,
                            const LeqFn& leq) {
  LatticeReport rep;
  rep.size = universe.size();

  // Pairwise sweep partitioned across workers over the immutable universe;
  // the reported counterexample is the first in index order.
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t none = universe.size() * universe.size() + 1;
  std::vector<std::size_t> first_bad(workers, none);
  auto sweep = [&](std::size_t w) {
    for (std::size_t i = w; i < universe.size(); i += workers)
      for (std::size_t j = i; j < universe.size(); ++j) {
        if (!brute_meet(universe, leq, universe[i], universe[j]) ||
            !brute_join(universe, leq, universe[i], universe[j])) {
          first_bad[w] = std::min(first_bad[w], i * universe.size() + j);
          return;
        }
      }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(sweep, w);
  sweep(0);
  for (auto& t : pool) t.join();

  const std::size_t bad =
      *std::min_element(first_bad.begin(), first_bad.end());
  rep.lattice = bad == none;
  if (!rep.lattice)
    rep.counterexample = to_text(universe[bad / universe.size()]) +
                         "  with  " + to_text(universe[bad % universe.size()]);
  rep.graded = true;
  for (auto [lo, hi] : hasse_edges(universe, leq))
    if (rank(universe[hi]) - rank(universe[lo]) != 1) {
      rep.graded = false;
      if (rep.counterexample.empty())
        rep.counterexample = "cover " + to_text(universe[lo]) + "  below  " +
                             to_text(universe[hi]);
      break;
    }
  return rep;
}

SublatticeReport check_sublattice(const std::vector<IntRelation>& sub,
                                  const BinOpFn& ambient_meet,
                                  const BinOpFn& ambient_join) {
  SublatticeReport rep;
  std::set<std::pair<PairMask, PairMask>> members;
  for (const auto& r : sub) members.insert({r.inc(), r.dec()});
  auto inside = [&](const IntRelation& r) {
    return members.count({r.inc(), r.dec()}) != 0;
  };
  rep.closed_meet = true;
  rep.closed_join = true;
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = i; j < sub.size(); ++j) {
      if (rep.closed_meet && !inside(ambient_meet(sub[i], sub[j]))) {
        rep.closed_meet = false;
        rep.counterexample = "meet of " + to_text(sub[i]) + "  and  " +
                             to_text(sub[j]);
      }
      if (rep.closed_join && !inside(ambient_join(sub[i], sub[j]))) {
        rep.closed_join = false;
        if (rep.counterexample.empty())
          rep.counterexample = "join of " + to_text(sub[i]) + "  and  " +
                               to_text(sub[j]);
      }
      if (!rep.closed_meet && !rep.closed_join) return rep;
    }
  return rep;
}

namespace {

struct ChainLengths {
  bool bounded = false;
  std::size_t bottom = 0, top = 0;
  // Achievable maximal-chain lengths as bitsets, from each node up to the
  // top and from the bottom up to each node.
  std::vector<std::uint64_t> to_top;
  std::vector<std::uint64_t> from_bottom;
};

ChainLengths chain_lengths(const std::vector<IntRelation>& universe,
                           const LeqFn& leq) {
  ChainLengths cl;
  if (universe.empty()) return cl;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (leq(universe[i], universe[cl.bottom])) cl.bottom = i;
    if (leq(universe[cl.top], universe[i])) cl.top = i;
  }
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (!leq(universe[cl.bottom], universe[i]) ||
        !leq(universe[i], universe[cl.top]))
      return cl;
  cl.bounded = true;

  const auto edges = hasse_edges(universe, leq);
  std::vector<std::vector<std::size_t>> up(universe.size()),
      down(universe.size());
  for (auto [lo, hi] : edges) {
    up[lo].push_back(hi);
    down[hi].push_back(lo);
  }

  std::vector<std::size_t> order(universe.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(universe[a], universe[b]);
  });

  cl.to_top.assign(universe.size(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    if (v == cl.top) {
      cl.to_top[v] = 1;  // encodes length 0
      continue;
    }
    for (std::size_t w : up[v]) cl.to_top[v] |= cl.to_top[w] << 1;
  }
  cl.from_bottom.assign(universe.size(), 0);
  for (std::size_t v : order) {
    if (v == cl.bottom) {
      cl.from_bottom[v] = 1;
      continue;
    }
    for (std::size_t w : down[v]) cl.from_bottom[v] |= cl.from_bottom[w] << 1;
  }
  return cl;
}

std::vector<int> set_bits(std::uint64_t mask) {
  std::vector<int> out;
  for (int len = 0; len < 64; ++len)
    if ((mask >> len) & 1) out.push_back(len);
  return out;
}

}  // namespace

GradedReport check_graded(const std::vector<IntRelation>& universe,
                          const LeqFn& leq) {
  GradedReport rep;
  const auto cl = chain_lengths(universe, leq);
  if (!cl.bounded) {
    rep.detail = "universe has no global bottom/top";
    return rep;
  }
  rep.maximal_chain_lengths = set_bits(cl.to_top[cl.bottom]);
  rep.graded = rep.maximal_chain_lengths.size() == 1;
  std::ostringstream d;
  d << "maximal chain lengths between bottom and top:";
  for (int len : rep.maximal_chain_lengths) d << ' ' << len;
  rep.detail = d.str();
  return rep;
}

std::vector<int> check_graded_through(const std::vector<IntRelation>& universe,
                                      const LeqFn& leq,
                                      const IntRelation& via) {
  const auto cl = chain_lengths(universe, leq);
  if (!cl.bounded) return {};
  std::uint64_t acc = 0;
  for (std::size_t v = 0; v < universe.size(); ++v) {
    if (universe[v] != via) continue;
    const auto lo = cl.from_bottom[v];
    const auto hi = cl.to_top[v];
    for (int l1 = 0; l1 < 64; ++l1)
      if ((lo >> l1) & 1) acc |= hi << l1;
  }
  return set_bits(acc);
}

namespace {

std::optional<std::string> cache_dir() {
  const char* dir = std::getenv("INTPOS_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::string(dir);
}

std::string cache_path(const std::string& name, int n) {
  return *cache_dir() + "/" + name + "_" + std::to_string(n) + ".txt";
}

}  // namespace

std::optional<std::vector<IntRelation>> load_universe_cache(
    const std::string& name, int n) {
  if (!cache_dir()) return std::nullopt;
  std::ifstream in(cache_path(name, n));
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::ostringstream want;
  want << "# universe " << name << " n=" << n << " count=";
  if (header.rfind(want.str(), 0) != 0) return std::nullopt;
  const std::size_t count = std::stoull(header.substr(want.str().size()));
  std::vector<IntRelation> out;
  out.reserve(count);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_relation(line));
  }
  if (out.size() != count) return std::nullopt;
  return out;
}

void store_universe_cache(const std::string& name, int n,
                          const std::vector<IntRelation>& universe) {
  if (!cache_dir()) return;
  std::ofstream out(cache_path(name, n));
  if (!out) return;
  out << "# universe " << name << " n=" << n << " count=" << universe.size()
      << '\n';
  for (const auto& r : universe) out << to_text(r) << '\n';
}

}  // namespace intpos
