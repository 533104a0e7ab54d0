#pragma once

#include <string>
#include <vector>

#include "latrep/poset.hpp"

namespace latrep {

// A finite lattice: a poset in which every pair has a greatest lower and a
// least upper bound. Meet/join tables are built at construction and are the
// single source for all algebra; empty meets are the top, empty joins the
// bottom.
class Lattice {
 public:
  // Throws not_a_lattice with a witness pair when some glb or lub is missing.
  static Lattice from_poset(Poset order);

  const Poset& order() const { return order_; }
  int size() const { return order_.size(); }
  const std::string& name(int i) const { return order_.name(i); }
  bool leq(int a, int b) const { return order_.leq(a, b); }

  int meet(int a, int b) const { return table_[static_cast<std::size_t>(a * size() + b)]; }
  int join(int a, int b) const { return jtable_[static_cast<std::size_t>(a * size() + b)]; }
  int meet_over(Mask m) const;  // meet of a subset; empty -> top
  int join_over(Mask m) const;  // join of a subset; empty -> bottom

  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  Poset order_;
  std::vector<int> table_;   // meets
  std::vector<int> jtable_;  // joins
  int bottom_ = 0;
  int top_ = 0;
};

// Completely meet-irreducible elements M(L): non-top elements that are not
// the meet of their strict up-set. In a finite lattice this coincides with
// having exactly one upper cover; tests keep the cover characterization as an
// independent oracle.
Mask meet_irreducibles(const Lattice& l);

// (M(L), <=) as an induced subposet, names preserved.
Poset irreducible_poset(const Lattice& l);

struct DistributivityReport {
  bool holds = true;
  int x = -1, y = -1, z = -1;  // witness triple when it fails
};
// Checks x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) over all triples. For a finite
// carrier this one law also settles infinite and dual infinite
// distributivity, which collapse to it.
DistributivityReport distributivity(const Lattice& l);

struct DecompositionReport {
  bool holds = true;
  int witness = -1;  // an element that is not the meet of irreducibles above it
};
// Every element r equals the meet of {x in M(L) | x >= r}.
DecompositionReport meet_decomposition(const Lattice& l);

struct MeetPrimeReport {
  bool holds = true;
  int q = -1;       // offending irreducible
  Mask family = 0;  // offending subset of M(L), as lattice element mask
};
// For every q in M(L) and C ⊆ M(L): q >= meet(C) implies q >= some member of
// C. Subsets are scanned in increasing cardinality with memoized meets.
MeetPrimeReport meet_prime_condition(const Lattice& l, int cap = kDefaultIrreducibleCap);

// Distributive, complemented, and every element the join of the atoms below
// it: the lattice is the powerset of its atoms.
bool is_atomic_boolean(const Lattice& l);

struct ChainGradingReport {
  bool holds = true;
  std::vector<int> witness;  // a maximal chain of the wrong length
  int expected = 0;          // |M(L)| + 1
};
// Requires distributivity, meet decomposition and the meet-prime condition
// (throws precondition_failed otherwise), then checks that every maximal
// chain has exactly |M(L)| + 1 elements.
ChainGradingReport graded_chains(const Lattice& l, int cap = kDefaultElementCap);

// Whether `subset` is closed under the lattice's meet and join.
bool is_sublattice_carrier(const Lattice& l, Mask subset);

}  // namespace latrep
