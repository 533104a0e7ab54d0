#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "latrep/poset.hpp"

using namespace latrep;
using namespace latrep::fixtures;

namespace {

// Oracle: enumerate the antichains of p directly; each antichain generates a
// distinct up-set and every up-set arises this way.
std::vector<Mask> upsets_via_antichains(const Poset& p) {
  std::vector<Mask> antichains;
  for (Mask m = 0;; ++m) {
    if (p.is_antichain(m)) antichains.push_back(m);
    if (m == p.all()) break;
  }
  std::vector<Mask> out;
  for (Mask a : antichains) {
    Mask u = 0;
    for (int x : bits_of(a)) u |= p.up(x);
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // Antichain -> generated up-set is a bijection.
  REQUIRE(out.size() == antichains.size());
  return out;
}

}  // namespace

TEST_CASE("construction validates names and antisymmetry") {
  CHECK_THROWS_AS(Poset::from_pairs({"a", "a"}, {}), duplicate_name);
  CHECK_THROWS_AS(Poset::from_pairs({"a b"}, {}), invalid_name);
  CHECK_THROWS_AS(Poset::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}), cycle_detected);
  CHECK_THROWS_AS(Poset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
                  cycle_detected);
  CHECK_THROWS_AS(Poset::from_pairs({"a"}, {{"a", "z"}}), unknown_element);

  Poset one = Poset::from_pairs({"a"}, {});
  CHECK(one.size() == 1);
  CHECK(one.leq(0, 0));
}

TEST_CASE("closure and covers") {
  Poset c = chain_poset(4);
  CHECK(c.leq(0, 3));  // transitive closure of the cover pairs
  CHECK(c.covers_up(0) == bit(1));
  CHECK(c.covers_up(3) == 0);

  Poset x = vee_poset();
  CHECK(x.leq(x.index_of("a"), x.index_of("b")));
  CHECK(!x.leq(x.index_of("a"), x.index_of("c")));
  CHECK(x.minimals() == (bit(x.index_of("a")) | bit(x.index_of("c"))));
  CHECK(x.maximals() == bit(x.index_of("b")));
}

TEST_CASE("principal up-sets") {
  Poset x = vee_poset();
  CHECK(principal_upset(x, "a") == (bit(x.index_of("a")) | bit(x.index_of("b"))));
  CHECK(principal_upset(x, "b") == bit(x.index_of("b")));
  CHECK_THROWS_AS(principal_upset(x, "z"), unknown_element);

  // x <= y iff the principal up-set of y is contained in that of x.
  for (const Poset& p : enumerate_posets(4)) {
    for (int a = 0; a < p.size(); ++a) {
      for (int b = 0; b < p.size(); ++b) {
        CHECK(subset(principal_upset(p, b), principal_upset(p, a)) == p.leq(a, b));
      }
    }
  }
}

TEST_CASE("all up-sets of the named fixtures") {
  Poset x = vee_poset();
  auto ups = all_upsets(x);
  // a=bit0, b=bit1, c=bit2: {}, {b}, {a,b}, {b,c}, {a,b,c}.
  CHECK(ups == std::vector<Mask>{0, 2, 3, 6, 7});

  CHECK(all_upsets(antichain_poset(3)).size() == 8);
  CHECK(all_upsets(chain_poset(3)).size() == 4);
  CHECK(all_upsets(chain_poset(1)) == std::vector<Mask>{0, 1});
}

TEST_CASE("up-set enumeration against the antichain oracle") {
  for (int n = 1; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n)) {
      auto ups = all_upsets(p);
      CHECK(ups == upsets_via_antichains(p));
      for (Mask u : ups) CHECK(p.is_upset(u));
      CHECK(std::is_sorted(ups.begin(), ups.end()));
    }
  }
}

TEST_CASE("up-set enumeration respects the cap") {
  CHECK_THROWS_AS(all_upsets(antichain_poset(21)), cap_exceeded);
  CHECK_NOTHROW(all_upsets(antichain_poset(21), 21));
}

TEST_CASE("maximal chains") {
  Poset x = vee_poset();
  auto chains = maximal_chains(x);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0] == std::vector<int>{x.index_of("a"), x.index_of("b")});
  CHECK(chains[1] == std::vector<int>{x.index_of("c"), x.index_of("b")});

  CHECK(maximal_chains(chain_poset(5)).size() == 1);
  CHECK(maximal_chains(chain_poset(5))[0].size() == 5);
  auto anti = maximal_chains(antichain_poset(4));
  CHECK(anti.size() == 4);
  for (const auto& ch : anti) CHECK(ch.size() == 1);
}

TEST_CASE("linear extensions are consistent with the order") {
  for (const Poset& p : enumerate_posets(5)) {
    auto ext = linear_extension(p);
    std::vector<int> pos(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(ext[static_cast<std::size_t>(i)])] = i;
    for (int a = 0; a < p.size(); ++a) {
      for (int b : bits_of(p.strict_up(a))) {
        CHECK(pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]);
      }
    }
  }
}

TEST_CASE("isomorphism on small cases") {
  CHECK(poset_isomorphism(chain_poset(3), chain_poset(3)).has_value());
  CHECK(!poset_isomorphism(chain_poset(3), antichain_poset(3)).has_value());
  CHECK(!poset_isomorphism(chain_poset(3), chain_poset(4)).has_value());

  // The V poset against its poset of principal up-sets under reverse inclusion.
  Poset x = vee_poset();
  std::vector<Mask> principal;
  for (int i = 0; i < x.size(); ++i) principal.push_back(x.up(i));
  std::vector<Mask> up(principal.size(), 0);
  for (std::size_t i = 0; i < principal.size(); ++i) {
    for (std::size_t j = 0; j < principal.size(); ++j) {
      if (subset(principal[j], principal[i])) up[i] |= bit(static_cast<int>(j));
    }
  }
  Poset principal_poset = Poset::from_relation({"pa", "pb", "pc"}, std::move(up));
  auto iso = poset_isomorphism(x, principal_poset);
  REQUIRE(iso.has_value());
  // The identity-shaped bijection works here and is lexicographically least.
  CHECK(*iso == std::vector<int>{0, 1, 2});
}

TEST_CASE("isomorphism is reflexive and symmetric over the corpus") {
  for (int n = 1; n <= 4; ++n) {
    auto posets = enumerate_posets(n);
    for (const Poset& p : posets) {
      auto self = poset_isomorphism(p, p);
      REQUIRE(self.has_value());
      for (int i = 0; i < p.size(); ++i) CHECK((*self)[static_cast<std::size_t>(i)] == i);
    }
    for (std::size_t i = 0; i < posets.size(); ++i) {
      for (std::size_t j = i + 1; j < posets.size(); ++j) {
        CHECK(!poset_isomorphism(posets[i], posets[j]).has_value());
        CHECK(!poset_isomorphism(posets[j], posets[i]).has_value());
      }
    }
  }
}

TEST_CASE("isomorphisms preserve the relation both ways") {
  // Two relabelings of the same poset.
  Poset p = Poset::from_pairs({"x", "y", "z", "w"}, {{"x", "y"}, {"x", "z"}, {"y", "w"}, {"z", "w"}});
  Poset q = Poset::from_pairs({"w", "z", "y", "x"}, {{"x", "y"}, {"x", "z"}, {"y", "w"}, {"z", "w"}});
  auto iso = poset_isomorphism(p, q);
  REQUIRE(iso.has_value());
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      CHECK(p.leq(a, b) == q.leq((*iso)[static_cast<std::size_t>(a)], (*iso)[static_cast<std::size_t>(b)]));
    }
  }
}

TEST_CASE("transitive reduction closed again reproduces the relation") {
  for (int n = 1; n <= 5; ++n) {
    for (const Poset& p : enumerate_posets(n)) {
      std::vector<std::pair<std::string, std::string>> covers;
      for (int i = 0; i < p.size(); ++i) {
        for (int j : bits_of(p.covers_up(i))) covers.emplace_back(p.name(i), p.name(j));
      }
      Poset rebuilt = Poset::from_pairs(p.names(), covers);
      CHECK(rebuilt.same_structure(p));
    }
  }
}

TEST_CASE("poset generation counts match the unlabeled census") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(3).size() == 5);
  CHECK(enumerate_posets(4).size() == 16);
  CHECK(enumerate_posets(5).size() == 63);
  CHECK(enumerate_posets(6).size() == 318);
  CHECK_THROWS_AS(enumerate_posets(7), cap_exceeded);
  CHECK_THROWS_AS(enumerate_posets(0), cap_exceeded);

  // The representatives are pairwise non-isomorphic.
  auto posets = enumerate_posets(4);
  for (std::size_t i = 0; i < posets.size(); ++i) {
    for (std::size_t j = i + 1; j < posets.size(); ++j) {
      CHECK(!poset_isomorphism(posets[i], posets[j]).has_value());
    }
  }
}

TEST_CASE("subposet keeps names and order") {
  Lattice l = diamond_stem();
  Poset sub = subposet(l.order(), meet_irreducibles(l));
  CHECK(sub.size() == 3);
  CHECK(sub.names() == std::vector<std::string>{"0", "a", "c"});
  CHECK(sub.leq(sub.index_of("0"), sub.index_of("a")));
  CHECK(!sub.leq(sub.index_of("a"), sub.index_of("c")));
}

TEST_CASE("set labels") {
  Poset x = vee_poset();
  CHECK(set_label(x, 0) == "{}");
  CHECK(set_label(x, x.all()) == "{a,b,c}");
  CHECK(set_label(x, bit(x.index_of("b")) | bit(x.index_of("c"))) == "{b,c}");
}
