#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "latrep/io.hpp"

using namespace latrep;
using namespace latrep::fixtures;

namespace {
const std::filesystem::path kData = LATREP_TEST_DATA_DIR;
}

TEST_CASE("poset files parse with closure and comments") {
  NamedPoset np = read_poset_file(kData / "vee.poset");
  CHECK(np.name == "X");
  CHECK(np.poset.same_structure(vee_poset()));

  auto inline_poset = parse_poset_text("poset P\nelems a b c # trailing\nle a b\nle b c\n");
  CHECK(inline_poset.poset.leq(0, 2));  // closure of a<b, b<c
}

TEST_CASE("poset parse errors") {
  CHECK_THROWS_AS(parse_poset_text(""), parse_error);
  CHECK_THROWS_AS(parse_poset_text("lattice L\nelems a\n"), parse_error);
  CHECK_THROWS_AS(parse_poset_text("poset P\nle a b\n"), parse_error);
  CHECK_THROWS_AS(parse_poset_text("poset P\nelems a\nwhat a\n"), parse_error);
  CHECK_THROWS_AS(parse_poset_text("poset P\nelems a b\nle a\n"), parse_error);
  CHECK_THROWS_AS(parse_poset_text("poset P\nelems a b\nle a z\n"), unknown_element);
  CHECK_THROWS_AS(parse_poset_text("poset P\nelems a a\n"), duplicate_name);
  CHECK_THROWS_AS(parse_poset_text("poset P\nelems a b\nle a b\nle b a\n"), cycle_detected);
}

TEST_CASE("lattice files run the lattice construction") {
  NamedLattice nl = read_lattice_file(kData / "diamond_stem.lat");
  CHECK(nl.lattice.size() == 5);
  // The V-shaped poset is not a lattice and the loader says so loudly.
  CHECK_THROWS_AS(parse_lattice_text("lattice V\nelems a b c\nle a b\nle c b\n"), not_a_lattice);
}

TEST_CASE("operator and fuzzy files resolve references") {
  NamedOperator no = read_operator_file(kData / "vee_g.monop");
  CHECK(no.name == "G");
  CHECK(no.op.carrier().same_structure(vee_poset()));
  CHECK(no.op.at(no.op.carrier().index_of("a")) ==
        (bit(no.op.carrier().index_of("a")) | bit(no.op.carrier().index_of("c"))));

  NamedFuzzy nf = read_fuzzy_file(kData / "vee_mu.fuzzy");
  CHECK(nf.map.domain().same_structure(vee_poset()));
  CHECK(nf.map.codomain().size() == 5);
}

TEST_CASE("operator parse errors") {
  auto bad = [&](const std::string& text) { return parse_operator_text(text, kData); };
  CHECK_THROWS_AS(bad("monop G\nassign a {}\n"), parse_error);  // missing carrier
  CHECK_THROWS_AS(bad("monop G\non vee.poset\nassign a {}\n"), parse_error);  // missing b, c
  CHECK_THROWS_AS(bad("monop G\non vee.poset\nassign a {}\nassign b {}\nassign c x\n"),
                  parse_error);  // no braces
  CHECK_THROWS_AS(bad("monop G\non vee.poset\nassign a {z}\nassign b {}\nassign c {}\n"),
                  parse_error);  // unknown member
  // A non-monotonic assignment parses but fails validation.
  CHECK_THROWS_AS(bad("monop G\non vee.poset\nassign a {}\nassign b {a,b}\nassign c {}\n"),
                  not_monotone);
}

TEST_CASE("round trips") {
  for (const char* file : {"vee.poset"}) {
    NamedPoset np = read_poset_file(kData / file);
    NamedPoset again = parse_poset_text(format_poset(np.name, np.poset));
    CHECK(again.name == np.name);
    CHECK(again.poset.same_structure(np.poset));
  }
  NamedLattice nl = read_lattice_file(kData / "diamond_stem.lat");
  NamedLattice lagain = parse_lattice_text(format_lattice(nl.name, nl.lattice));
  CHECK(lagain.lattice.order().same_structure(nl.lattice.order()));

  NamedOperator no = read_operator_file(kData / "vee_g1.monop");
  std::string text = format_operator(no.name, no.op, "vee.poset");
  NamedOperator oagain = parse_operator_text(text, kData);
  CHECK(oagain.op == no.op);
}

TEST_CASE("round trips across the generated corpus") {
  for (const Poset& p : enumerate_posets(4)) {
    CHECK(parse_poset_text(format_poset("p", p)).poset.same_structure(p));
  }
}

TEST_CASE("dot export shape") {
  std::string dot = dot_poset("X", vee_poset());
  CHECK(dot.find("digraph \"X\"") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  // Two cover edges: a->b and c->b.
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1)) ++edges;
  CHECK(edges == 2);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
}
