#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "intpos/dot.hpp"
#include "intpos/enumerate.hpp"
#include "intpos/perms.hpp"
#include "intpos/projections.hpp"

using namespace intpos;

namespace {

IntRelation rel(const char* text) { return parse_relation(text); }

const LeqFn leq = [](const IntRelation& a, const IntRelation& b) {
  return wo_leq(a, b);
};

}  // namespace

TEST_CASE("universe sizes") {
  CHECK(enumerate_level(Level::Rel, 3).size() == 64);
  CHECK(enumerate_level(Level::Antisym, 3).size() == 27);
  CHECK(enumerate_level(Level::Trans, 3).size() == 29);
  const std::size_t poset_counts[] = {1, 3, 19, 219, 4231};
  for (int n = 1; n <= 5; ++n)
    CHECK(enumerate_level(Level::Poset, n).size() == poset_counts[n - 1]);
  CHECK(enumerate_family(FamilyId::woep(), 4).size() == 24);
  CHECK(enumerate_family(FamilyId::woep(), 6).size() == 720);
  CHECK(enumerate_family(FamilyId::pep(Orientation::tamari(6)), 6).size() ==
        132);
  CHECK_THROWS_AS(enumerate_level(Level::Rel, 4), domain_error);
  CHECK_THROWS_AS(enumerate_level(Level::Poset, 6), domain_error);
  CHECK_THROWS_AS(enumerate_family(FamilyId::woip(), 6), domain_error);
}

TEST_CASE("universes are canonically sorted") {
  auto posets = enumerate_level(Level::Poset, 3);
  for (std::size_t i = 1; i < posets.size(); ++i) {
    const auto &a = posets[i - 1], &b = posets[i];
    const auto ka = std::tuple{rank(a), a.inc(), a.dec()};
    const auto kb = std::tuple{rank(b), b.inc(), b.dec()};
    CHECK(ka < kb);
  }
}

TEST_CASE("count table matches the enumeration grid") {
  const auto table = count_table(4);
  const std::map<std::string, std::vector<long long>> expected = {
      {"WOEP", {1, 2, 6, 24}},  {"TOEP", {1, 2, 5, 14}},
      {"BOEP", {1, 2, 4, 8}},   {"WOIP", {1, 3, 17, 151}},
      {"TOIP", {1, 3, 13, 68}}, {"BOIP", {1, 3, 9, 27}},
      {"WOFP", {1, 3, 13, 75}}, {"TOFP", {1, 3, 11, 45}},
      {"BOFP", {1, 3, 9, 27}},
  };
  REQUIRE(table.rows.size() == expected.size());
  for (const auto& [name, counts] : table.rows)
    CHECK(counts == expected.at(name));
  CHECK_THROWS_AS(count_table(6), domain_error);
}

TEST_CASE("brute meet and join") {
  const auto posets = enumerate_level(Level::Poset, 3);
  const auto m = brute_meet(posets, leq, chain_poset(parse_permutation("231")),
                            chain_poset(parse_permutation("312")));
  REQUIRE(m.has_value());
  CHECK(*m == chain_poset(parse_permutation("123")));
  for (const auto& r : posets) CHECK(*brute_meet(posets, leq, r, r) == r);

  std::vector<IntRelation> wofp;
  for (const auto& r : posets)
    if (is_member(FamilyId::wofp(), r)) wofp.push_back(r);
  const auto fm = brute_meet(wofp, leq, partition_poset(parse_partition("2|13")),
                             partition_poset(parse_partition("123")));
  REQUIRE(fm.has_value());
  CHECK(*fm == partition_poset(parse_partition("12|3")));
}

TEST_CASE("lattice and sublattice reports") {
  const auto posets = enumerate_level(Level::Poset, 3);
  const auto rep = check_lattice(posets, leq);
  CHECK(rep.size == 19);
  CHECK(rep.lattice);
  CHECK(rep.graded);

  std::vector<IntRelation> woip;
  for (const auto& r : posets)
    if (is_member(FamilyId::woip(), r)) woip.push_back(r);
  CHECK(woip.size() == 17);
  const auto sub = check_sublattice(
      woip,
      [](const IntRelation& a, const IntRelation& b) {
        return meet(Level::Poset, a, b);
      },
      [](const IntRelation& a, const IntRelation& b) {
        return join(Level::Poset, a, b);
      });
  CHECK_FALSE(sub.closed_meet);
  CHECK_FALSE(sub.closed_join);
  CHECK_FALSE(sub.counterexample.empty());
}

TEST_CASE("graded reports") {
  std::vector<IntRelation> rel2;
  for (PairMask inc = 0; inc < 2; ++inc)
    for (PairMask dec = 0; dec < 2; ++dec)
      rel2.push_back(IntRelation::from_masks(2, inc, dec));
  const auto rep = check_graded(rel2, leq);
  CHECK(rep.graded);
  CHECK(rep.maximal_chain_lengths == std::vector<int>{2});

  const auto rep4 = check_graded(enumerate_level(Level::Poset, 4), leq);
  CHECK(rep4.graded);
  CHECK(rep4.maximal_chain_lengths == std::vector<int>{12});
}

TEST_CASE("the weak order on Tamari element posets is the Tamari lattice") {
  const Orientation o = Orientation::tamari(4);
  const auto trees = enumerate_family(FamilyId::pep(o), 4);
  CHECK(trees.size() == 14);

  // independent order: the lattice congruence classes of the weak order on
  // S(4) under the insertion fibers
  std::map<std::pair<PairMask, PairMask>, std::vector<Permutation>> fibers;
  for (const auto& s : all_permutations(4)) {
    const auto t = insert_permutree(o, s);
    fibers[{t.inc(), t.dec()}].push_back(s);
  }
  CHECK(fibers.size() == 14);
  for (const auto& t : trees)
    for (const auto& u : trees) {
      bool congruence_leq = false;
      for (const auto& s : fibers.at({t.inc(), t.dec()}))
        for (const auto& v : fibers.at({u.inc(), u.dec()}))
          if (perm_leq(s, v)) congruence_leq = true;
      CHECK(wo_leq(t, u) == congruence_leq);
    }

  const auto rep = check_lattice(trees, leq);
  CHECK(rep.lattice);
}

TEST_CASE("the weak order on WOFP(4) is the facial weak order") {
  // PFP at the empty orientation is WOFP, and the order agrees with the
  // merge/split cover closure (checked pairwise in the perms suite).
  const auto faces = enumerate_family(
      FamilyId::pfp(Orientation::weak(4)), 4);
  CHECK(faces.size() == 75);
  const auto wofp = enumerate_family(FamilyId::wofp(), 4);
  CHECK(faces == wofp);
}

TEST_CASE("universe cache round trip") {
  const std::string dir = "/tmp/intpos_cache_test";
  const int rc = std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  REQUIRE(rc == 0);
  setenv("INTPOS_CACHE_DIR", dir.c_str(), 1);
  const auto posets = enumerate_level(Level::Poset, 3);
  store_universe_cache("testuni", 3, posets);
  const auto loaded = load_universe_cache("testuni", 3);
  unsetenv("INTPOS_CACHE_DIR");
  REQUIRE(loaded.has_value());
  CHECK(*loaded == posets);
  CHECK_FALSE(load_universe_cache("missing", 3).has_value());
}

TEST_CASE("dot export") {
  const auto path = hasse_dot(chain_poset(parse_permutation("123")));
  CHECK(path.find("v1 -> v2") != std::string::npos);
  CHECK(path.find("v2 -> v3") != std::string::npos);
  CHECK(path.find("v1 -> v3") == std::string::npos);
  CHECK_THROWS_AS(hasse_dot(rel("n=3; inc: 1<2, 2<3; dec: -")), domain_error);

  const auto posets = enumerate_level(Level::Poset, 3);
  const auto dot = hasse_dot(posets, leq, "ipos3");
  std::size_t nodes = 0;
  for (std::size_t at = dot.find("[label="); at != std::string::npos;
       at = dot.find("[label=", at + 1))
    ++nodes;
  CHECK(nodes == 19);

  const auto woep = enumerate_family(FamilyId::woep(), 3);
  const auto hexagon = hasse_dot(woep, leq, "woep3");
  std::size_t edges = 0;
  for (std::size_t at = hexagon.find(" -> "); at != std::string::npos;
       at = hexagon.find(" -> ", at + 1))
    ++edges;
  CHECK(woep.size() == 6);
  CHECK(edges == 6);
}
