#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "latrep/family.hpp"
#include "latrep/fuzzy.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"
#include "latrep/quotient.hpp"

namespace latrep {

// Line-oriented text formats, '#' starts a comment:
//
//   poset <name>            lattice <name>         fuzzy <name>
//   elems a b c             elems 0 a 1            domain <posetfile>
//   le a b                  le 0 a                 codomain <latticefile>
//                           le a 1                 map a 0
//
//   monop <name>
//   on <posetfile>
//   assign a {b,c}
//
// Relations are closed reflexively and transitively on load; lattice files
// additionally run the lattice construction and fail loudly. Referenced files
// resolve relative to the referencing file.

struct NamedPoset {
  std::string name;
  Poset poset;
};
struct NamedLattice {
  std::string name;
  Lattice lattice;
};
struct NamedOperator {
  std::string name;
  MonotonicOperator op;
};
struct NamedFuzzy {
  std::string name;
  FuzzyUpSet map;
};

NamedPoset parse_poset_text(std::string_view text, std::string_view source = "<input>");
NamedLattice parse_lattice_text(std::string_view text, std::string_view source = "<input>");
NamedOperator parse_operator_text(std::string_view text, const std::filesystem::path& base_dir,
                                  std::string_view source = "<input>");
NamedFuzzy parse_fuzzy_text(std::string_view text, const std::filesystem::path& base_dir,
                            std::string_view source = "<input>");

NamedPoset read_poset_file(const std::filesystem::path& path);
NamedLattice read_lattice_file(const std::filesystem::path& path);
NamedOperator read_operator_file(const std::filesystem::path& path);
NamedFuzzy read_fuzzy_file(const std::filesystem::path& path);

// Emission; every emitted file re-parses to an equal structure. Relations are
// written as cover pairs.
std::string format_poset(std::string_view name, const Poset& p);
std::string format_lattice(std::string_view name, const Lattice& l);
std::string format_operator(std::string_view name, const MonotonicOperator& g,
                            std::string_view poset_ref);

// Hasse diagram of the cover relation, bottom-to-top.
std::string dot_poset(std::string_view graph_name, const Poset& p);

}  // namespace latrep
