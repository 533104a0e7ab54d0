#pragma once

#include <string>
#include <vector>

#include "latrep/family.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"

namespace latrep {

struct UpsetLattice {
  UpSetFamily family;  // all up-sets of the base poset, ascending by mask
  Lattice lattice;     // ordered by reverse inclusion; element i is family.sets[i]
};

// F_X: the lattice of all up-sets of X. Verifies distributivity and that the
// bottom is X and the top is the empty set (internal_disagreement otherwise).
UpsetLattice upset_lattice(const Poset& x, int cap = kDefaultElementCap);

struct BirkhoffMap {
  Poset irreducibles;        // (M(L), <=)
  std::vector<Mask> image;   // image[p] = {x in M(L) | x >= p}, over irreducible indices
  UpSetFamily family;        // the distinct image sets
};

// The canonical map p -> {x in M(L) | x >= p}. Every image set is an up-set
// of (M(L), <=).
BirkhoffMap birkhoff_map(const Lattice& l);

struct RepresentationVerdict {
  bool representable = false;
  bool predicate_leg = false;    // distributive, meet decomposition, meet-prime
  bool isomorphism_leg = false;  // explicit search for L ≅ F_{M(L)}
  DistributivityReport dist;
  DecompositionReport decomp;
  MeetPrimeReport prime;
  Poset irreducibles;
  std::vector<Mask> map;  // the canonical map; a bijection onto all up-sets when representable
  std::string reason;     // failure summary when not representable
};

// Decides whether L is the up-set lattice of a poset. Computes the predicate
// route and the explicit isomorphism route independently; the two must agree
// (internal_disagreement otherwise). When representable, `map` is the
// canonical isomorphism onto the up-sets of (M(L), <=).
RepresentationVerdict upset_representation(const Lattice& l, int element_cap = kDefaultElementCap,
                                           int irr_cap = kDefaultIrreducibleCap);

// Decides L1 ≅ L2 through (M(L1), <=) ≅ (M(L2), <=). Both lattices must be
// representable (precondition_failed otherwise). Cross-checked against a
// direct lattice isomorphism search.
bool iso_by_irreducibles(const Lattice& l1, const Lattice& l2,
                         int element_cap = kDefaultElementCap,
                         int irr_cap = kDefaultIrreducibleCap);

}  // namespace latrep
