#pragma once

#include <vector>

#include "latrep/family.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"

namespace latrep {

// A monotone map from a poset into a lattice: x <= y implies
// value(x) <= value(y). Validated at construction.
class FuzzyUpSet {
 public:
  FuzzyUpSet(Poset domain, Lattice codomain, std::vector<int> values);

  const Poset& domain() const { return domain_; }
  const Lattice& codomain() const { return codomain_; }
  int value(int x) const { return values_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& values() const { return values_; }

 private:
  Poset domain_;
  Lattice codomain_;
  std::vector<int> values_;
};

// The p-cut {x | value(x) >= p}; always an up-set of the domain.
Mask cut(const FuzzyUpSet& mu, int p);

// The distinct cuts, as a family over the domain.
UpSetFamily cut_family(const FuzzyUpSet& mu);

struct MeetClosure {
  Lattice lattice;           // the closure under meets of the image, plus the top
  std::vector<int> members;  // codomain indices, ascending; element i of `lattice`
};
// The sub-meet-semilattice of the codomain generated by the image (the empty
// meet contributes the top), under the induced order.
MeetClosure image_meet_closure(const FuzzyUpSet& mu);

// The canonical map x -> intersection of all family members containing x,
// into (family, ⊇). Requires the family to be intersection closed
// (not_intersection_closed) and to contain the full carrier
// (missing_full_set). Its cut family equals the input family and every member
// p equals its own p-cut; both postconditions are re-verified (cut_mismatch,
// a certificate, if they ever fail).
FuzzyUpSet canonical_fuzzy_upset(const UpSetFamily& family);

struct CutCompletenessReport {
  bool holds = true;
  int x = -1;       // witness element
  Mask family = 0;  // witness subset of the domain
};
// Whether the cuts of mu are exactly the up-sets of the domain. Evaluates the
// subset condition (value(x) >= meet of values over a subset implies x >=
// some member) by brute force, and independently compares the cut family with
// all up-sets; the two verdicts must agree (internal_disagreement otherwise).
CutCompletenessReport cuts_are_all_upsets(const FuzzyUpSet& mu, int cap = kDefaultElementCap);

// Whether every value lies in M of the image meet-closure. Requires
// cuts_are_all_upsets to hold (precondition_failed otherwise); the theory
// guarantees the answer is yes, so this is a verification predicate.
bool image_in_irreducibles(const FuzzyUpSet& mu, int cap = kDefaultElementCap);

}  // namespace latrep
