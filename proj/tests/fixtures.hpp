#pragma once

#include <string>
#include <vector>

#include "latrep/birkhoff.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"

namespace latrep::fixtures {

// The V-shaped poset with a < b and c < b.
inline Poset vee_poset() {
  return Poset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
}

// Five-element lattice 0 < d < a, c < 1.
inline Lattice diamond_stem() {
  return Lattice::from_poset(Poset::from_pairs(
      {"0", "d", "a", "c", "1"}, {{"0", "d"}, {"d", "a"}, {"d", "c"}, {"a", "1"}, {"c", "1"}}));
}

// The 2x2 diamond on {d, a, c, 1}.
inline Lattice diamond() {
  return Lattice::from_poset(
      Poset::from_pairs({"d", "a", "c", "1"}, {{"d", "a"}, {"d", "c"}, {"a", "1"}, {"c", "1"}}));
}

// The five-element modular non-distributive lattice.
inline Lattice m3() {
  return Lattice::from_poset(Poset::from_pairs(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

// The five-element non-modular lattice 0 < a < c < 1, 0 < b < 1.
inline Lattice n5() {
  return Lattice::from_poset(Poset::from_pairs(
      {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}));
}

inline Poset chain_poset(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(names[static_cast<std::size_t>(i)],
                                                     names[static_cast<std::size_t>(i + 1)]);
  return Poset::from_pairs(std::move(names), pairs);
}

inline Poset antichain_poset(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return Poset::from_pairs(std::move(names), {});
}

inline Lattice chain_lattice(int n) { return Lattice::from_poset(chain_poset(n)); }

// The powerset of n atoms, elements named by their atom sets.
inline Lattice powerset_lattice(int n) {
  const int size = 1 << n;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(size));
  for (int s = 0; s < size; ++s) {
    std::string label = "{";
    for (int a = 0; a < n; ++a) {
      if ((s >> a) & 1) {
        if (label.size() > 1) label += ',';
        label += static_cast<char>('u' + a);
      }
    }
    label += '}';
    names.push_back(label);
  }
  std::vector<Mask> up(static_cast<std::size_t>(size), 0);
  for (int s = 0; s < size; ++s) {
    for (int t = 0; t < size; ++t) {
      if ((s & ~t) == 0) up[static_cast<std::size_t>(s)] |= bit(t);
    }
  }
  return Lattice::from_poset(Poset::from_relation(std::move(names), std::move(up)));
}

}  // namespace latrep::fixtures
