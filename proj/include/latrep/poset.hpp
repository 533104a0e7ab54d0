#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latrep/errors.hpp"

namespace latrep {

// Element subsets are bit masks over dense element indices. Everything in
// this library is capped well below 64 elements.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }
constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

std::vector<int> bits_of(Mask m);

// Default caps. All caps are configuration: every operation that can blow up
// takes its cap as a parameter, and the CLI exposes them as flags.
inline constexpr int kDefaultElementCap = 20;   // poset size for enumerations
inline constexpr int kDefaultGenerateCap = 6;   // poset generation
inline constexpr int kDefaultIrreducibleCap = 15;  // |M(L)| for subset scans
inline constexpr int kDefaultFamilyCap = 24;    // |F_{M(L)}| for sublattice search

// A finite poset over named elements. Immutable after construction; the
// relation is stored as one up-set mask per element, together with its
// transitive reduction (the cover relation).
class Poset {
 public:
  Poset() = default;

  // Builds the reflexive-transitive closure of `pairs` (each meaning
  // first <= second) and validates antisymmetry, reporting a witness cycle.
  static Poset from_pairs(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

  // Builds from a full relation ups[i] = {j | i <= j}; validates all three
  // poset axioms.
  static Poset from_relation(std::vector<std::string> names, std::vector<Mask> ups);

  int size() const { return static_cast<int>(names_.size()); }
  Mask all() const { return size() == 64 ? ~Mask{0} : (bit(size()) - 1); }

  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view element) const;
  int index_of(std::string_view element) const;  // throws unknown_element

  bool leq(int a, int b) const { return has_bit(up_[static_cast<std::size_t>(a)], b); }
  Mask up(int i) const { return up_[static_cast<std::size_t>(i)]; }
  Mask down(int i) const { return down_[static_cast<std::size_t>(i)]; }
  Mask strict_up(int i) const { return up(i) & ~bit(i); }
  Mask strict_down(int i) const { return down(i) & ~bit(i); }
  // Upper covers of i: the transitive reduction of the relation.
  Mask covers_up(int i) const { return cover_[static_cast<std::size_t>(i)]; }
  Mask covers_down(int i) const;

  Mask minimals() const;
  Mask maximals() const;

  bool is_upset(Mask m) const;
  bool is_antichain(Mask m) const;

  // Structural equality: same names in the same order, same relation.
  bool same_structure(const Poset& other) const {
    return names_ == other.names_ && up_ == other.up_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<Mask> cover_;

  void finish();  // derives down_/cover_ from up_
};

// {y | y >= x}.
Mask principal_upset(const Poset& p, int x);
Mask principal_upset(const Poset& p, std::string_view element);

// A linear extension, minimal elements first; ties broken by index.
std::vector<int> linear_extension(const Poset& p);

// Every up-set of p exactly once, ascending by mask value. The walk only
// visits valid up-sets: an element may join the set only when its strict
// up-set is already in.
std::vector<Mask> all_upsets(const Poset& p, int cap = kDefaultElementCap);

// All maximal chains as bottom-to-top element index lists, in DFS order over
// the cover relation (deterministic).
std::vector<std::vector<int>> maximal_chains(const Poset& p, int cap = kDefaultElementCap);

// An order isomorphism p -> q as an index map, or nullopt. Returns the
// lexicographically least bijection under element ordering.
std::optional<std::vector<int>> poset_isomorphism(const Poset& p, const Poset& q);

// One representative per isomorphism class of posets on n labeled elements,
// in a canonical deterministic order. Class counts for n=1..6 are
// 1, 2, 5, 16, 63, 318.
std::vector<Poset> enumerate_posets(int n, int cap = kDefaultGenerateCap);

// The induced subposet on `keep`, element names preserved.
Poset subposet(const Poset& p, Mask keep);

// "{a,b,c}" (elements in index order; "{}" when empty).
std::string set_label(const Poset& p, Mask m);

}  // namespace latrep
