#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "latrep/corpus.hpp"
#include "latrep/quotient.hpp"

using namespace latrep;
using namespace latrep::fixtures;

namespace {

// The V-poset fixture operator: G(a) = {a,c}, G(b) = {}, G(c) = {c}.
MonotonicOperator vee_g() {
  Poset x = vee_poset();
  std::vector<Mask> assign(3, 0);
  assign[static_cast<std::size_t>(x.index_of("a"))] = bit(x.index_of("a")) | bit(x.index_of("c"));
  assign[static_cast<std::size_t>(x.index_of("c"))] = bit(x.index_of("c"));
  return MonotonicOperator(std::move(x), std::move(assign));
}

// A second fixture with the same quotient: G1(a) = X, G1(b) = {b}, G1(c) = {b,c}.
MonotonicOperator vee_g1() {
  Poset x = vee_poset();
  std::vector<Mask> assign(3, 0);
  assign[static_cast<std::size_t>(x.index_of("a"))] = x.all();
  assign[static_cast<std::size_t>(x.index_of("b"))] = bit(x.index_of("b"));
  assign[static_cast<std::size_t>(x.index_of("c"))] = bit(x.index_of("b")) | bit(x.index_of("c"));
  return MonotonicOperator(std::move(x), std::move(assign));
}

}  // namespace

TEST_CASE("operators validate order reversal") {
  Poset x = vee_poset();
  std::vector<Mask> growing(3, 0);
  growing[static_cast<std::size_t>(x.index_of("b"))] = x.all();  // above a, but bigger set
  CHECK_THROWS_AS(MonotonicOperator(x, growing), not_monotone);
  CHECK_THROWS_AS(MonotonicOperator(x, std::vector<Mask>{~Mask{0}, 0, 0}), unknown_element);
  CHECK_NOTHROW(vee_g());
  CHECK_NOTHROW(vee_g1());
}

TEST_CASE("the fixture quotient is the chain [a] < [c] < [b]") {
  QuotientPoset q = quotient(vee_g());
  REQUIRE(q.classes.size() == 3);
  CHECK(q.classes.names() == std::vector<std::string>{"[a]", "[b]", "[c]"});
  int a = q.classes.index_of("[a]");
  int b = q.classes.index_of("[b]");
  int c = q.classes.index_of("[c]");
  CHECK(q.classes.leq(a, c));
  CHECK(q.classes.leq(c, b));
  CHECK(!q.classes.leq(b, a));
  CHECK(maximal_chains(q.classes).size() == 1);

  // Classes partition the base.
  Mask all = 0;
  for (std::size_t i = 0; i < q.members.size(); ++i) {
    for (std::size_t j = i + 1; j < q.members.size(); ++j) CHECK((q.members[i] & q.members[j]) == 0);
    all |= q.members[i];
  }
  CHECK(all == q.base.all());
}

TEST_CASE("a constant operator collapses to one class") {
  Poset x = vee_poset();
  QuotientPoset q = quotient(MonotonicOperator(x, std::vector<Mask>(3, bit(0))));
  CHECK(q.classes.size() == 1);
  CHECK(q.members[0] == x.all());
}

TEST_CASE("the quotient is isomorphic to the image family under reverse inclusion") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    Poset x = random_poset(1 + static_cast<int>(rng() % 6), rng);
    MonotonicOperator g = random_monotone_operator(x, rng);
    QuotientPoset q = quotient(g);

    std::vector<Mask> values = q.values;
    std::vector<Mask> up(values.size(), 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (subset(values[j], values[i])) up[i] |= bit(static_cast<int>(j));
      }
    }
    Poset image_poset = Poset::from_relation(q.classes.names(), std::move(up));
    // Same index layout on both sides, so the identity must be an iso.
    for (int a = 0; a < q.classes.size(); ++a) {
      for (int b = 0; b < q.classes.size(); ++b) CHECK(q.classes.leq(a, b) == image_poset.leq(a, b));
    }
  }
}

TEST_CASE("the expanded family of the fixture operator") {
  EmbeddingWitness w = embedded_family(vee_g());
  CHECK(w.host.size() == 5);
  CHECK(w.quotient_sets.size() == 4);  // F of a 3-chain
  CHECK(w.image.sets == std::vector<Mask>{0, 0b010, 0b110, 0b111});  // {}, {b}, {b,c}, X
}

TEST_CASE("the expanded family of a constant operator") {
  Poset x = vee_poset();
  EmbeddingWitness w = embedded_family(MonotonicOperator(x, std::vector<Mask>(3, 0)));
  CHECK(w.image.sets == std::vector<Mask>{0, x.all()});
}

TEST_CASE("random operators always produce valid embedding witnesses") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    Poset x = random_poset(1 + static_cast<int>(rng() % 6), rng);
    MonotonicOperator g = random_monotone_operator(x, rng);
    // embedded_family re-verifies every invariant internally.
    EmbeddingWitness w = embedded_family(g);
    CHECK(w.image.size() == static_cast<int>(w.quotient_sets.size()));
  }
}

TEST_CASE("complete sublattice families of the V poset's up-set lattice") {
  UpsetLattice f = upset_lattice(vee_poset());
  auto families = complete_sublattice_families(f.family);
  CHECK(families.size() == 7);

  // Independent oracle: filter all subsets directly.
  std::vector<std::vector<int>> oracle;
  const int n = f.family.size();
  for (Mask sub = 0; sub < (Mask{1} << n); ++sub) {
    if (!has_bit(sub, f.family.index_of(0)) || !has_bit(sub, f.family.index_of(0b111))) continue;
    bool closed = true;
    for (int i : bits_of(sub)) {
      for (int j : bits_of(sub)) {
        Mask u = f.family.sets[static_cast<std::size_t>(i)] | f.family.sets[static_cast<std::size_t>(j)];
        Mask v = f.family.sets[static_cast<std::size_t>(i)] & f.family.sets[static_cast<std::size_t>(j)];
        if (!has_bit(sub, f.family.index_of(u)) || !has_bit(sub, f.family.index_of(v))) closed = false;
      }
    }
    if (closed) oracle.push_back(bits_of(sub));
  }
  std::sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  CHECK(families == oracle);

  // {∅, {a,b}, {b,c}, X} is not closed: the intersection {b} is missing.
  std::vector<int> bad{f.family.index_of(0), f.family.index_of(0b011), f.family.index_of(0b110),
                       f.family.index_of(0b111)};
  std::sort(bad.begin(), bad.end());
  CHECK(std::find(families.begin(), families.end(), bad) == families.end());
}

TEST_CASE("a sublattice of the stemmed diamond that does not embed") {
  Lattice l0 = diamond();
  Lattice l = diamond_stem();
  auto verdict = decide_embedding(l0, l);
  CHECK(!verdict.embeds);
  CHECK(!verdict.operator_leg);
  CHECK(!verdict.direct_leg);

  // Yet it is a plain sublattice of L.
  Mask carrier = 0;
  for (const char* n : {"d", "a", "c", "1"}) carrier |= bit(l.order().index_of(n));
  CHECK(is_sublattice_carrier(l, carrier));
}

TEST_CASE("the four-chain embeds into the V poset's up-set lattice") {
  Lattice chain4 = chain_lattice(4);
  Lattice fx = upset_lattice(vee_poset()).lattice;
  auto verdict = decide_embedding(chain4, fx);
  REQUIRE(verdict.embeds);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness_family.size() == 4);

  // The reported isomorphism maps the chain onto F of the quotient.
  UpsetLattice fq = upset_lattice(quotient(*verdict.witness).classes);
  REQUIRE(verdict.iso.size() == 4);
  for (int a = 0; a < chain4.size(); ++a) {
    for (int b = 0; b < chain4.size(); ++b) {
      CHECK(chain4.leq(a, b) == fq.lattice.leq(verdict.iso[static_cast<std::size_t>(a)],
                                               verdict.iso[static_cast<std::size_t>(b)]));
    }
  }

  // The direct leg found a witness too.
  REQUIRE(verdict.direct.has_value());
  const auto& h = *verdict.direct;
  for (int a = 0; a < chain4.size(); ++a) {
    for (int b = 0; b < chain4.size(); ++b) {
      CHECK(h[static_cast<std::size_t>(chain4.meet(a, b))] ==
            fx.meet(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)]));
      CHECK(h[static_cast<std::size_t>(chain4.join(a, b))] ==
            fx.join(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)]));
    }
  }
}

TEST_CASE("the two-chain embeds anywhere representable") {
  Lattice two = chain_lattice(2);
  auto v1 = decide_embedding(two, diamond_stem());
  CHECK(v1.embeds);
  CHECK(v1.witness_family.size() == 2);  // the {∅, M(L)} family comes first
  auto v2 = decide_embedding(two, powerset_lattice(3));
  CHECK(v2.embeds);
}

TEST_CASE("embedding preconditions and caps") {
  CHECK_THROWS_AS(decide_embedding(m3(), powerset_lattice(3)), precondition_failed);
  CHECK_THROWS_AS(decide_embedding(chain_lattice(2), m3()), precondition_failed);
  CHECK_THROWS_AS(decide_embedding(chain_lattice(2), powerset_lattice(3), /*family_cap=*/3),
                  cap_exceeded);
}

TEST_CASE("direct embedding search basics") {
  CHECK(!direct_embedding_search(diamond(), diamond_stem()).has_value());
  auto found = direct_embedding_search(chain_lattice(2), diamond_stem());
  REQUIRE(found.has_value());
  CHECK((*found)[0] == diamond_stem().bottom());
  CHECK((*found)[1] == diamond_stem().top());
}

TEST_CASE("boolean embedding operator on the cube") {
  Lattice cube = powerset_lattice(3);
  Poset mp = irreducible_poset(cube);
  REQUIRE(mp.size() == 3);

  // A four-chain family {∅, {m0}, {m0,m1}, M(L)}.
  UpSetFamily chain_family = UpSetFamily::of(mp, {0, bit(0), bit(0) | bit(1), mp.all()});
  MonotonicOperator g = boolean_embedding_operator(cube, chain_family);
  CHECK(g.at(0) == bit(0));
  CHECK(g.at(1) == (bit(0) | bit(1)));
  CHECK(g.at(2) == mp.all());
  CHECK(quotient(g).classes.size() == 3);

  // The trivial {∅, M(L)} family: constant operator, one class.
  MonotonicOperator g2 = boolean_embedding_operator(cube, UpSetFamily::of(mp, {0, mp.all()}));
  CHECK(quotient(g2).classes.size() == 1);

  // A family that does not contain the empty set still works: the shift
  // handles it. Two comparable sets give a 2-chain, so one class suffices.
  UpSetFamily off = UpSetFamily::of(mp, {bit(0), bit(0) | bit(1)});
  MonotonicOperator g3 = boolean_embedding_operator(cube, off);
  CHECK(quotient(g3).classes.size() == 1);
  CHECK(upset_lattice(quotient(g3).classes).family.size() == 2);

  CHECK_THROWS_AS(boolean_embedding_operator(diamond_stem(), chain_family), precondition_failed);
  CHECK_THROWS_AS(boolean_embedding_operator(cube, UpSetFamily::of(mp, {mp.all()})),
                  precondition_failed);
}

TEST_CASE("finite sublattices of a boolean lattice always embed") {
  Lattice cube = powerset_lattice(3);
  Poset mp = irreducible_poset(cube);
  UpsetLattice f = upset_lattice(mp);
  for (const auto& indices : complete_sublattice_families(f.family)) {
    std::vector<Mask> sets;
    for (int i : indices) sets.push_back(f.family.sets[static_cast<std::size_t>(i)]);
    UpSetFamily fam = UpSetFamily::of(mp, std::move(sets));
    Lattice l0 = family_lattice(fam);
    CHECK(decide_embedding(l0, cube).embeds);
  }
}
