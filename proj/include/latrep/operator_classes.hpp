#pragma once

#include <vector>

#include "latrep/family.hpp"
#include "latrep/lattice.hpp"
#include "latrep/quotient.hpp"

namespace latrep {

// Two operators on the same carrier are equivalent when their expanded
// families S_G coincide. Throws carrier_mismatch for distinct carriers.
bool are_equivalent(const MonotonicOperator& g1, const MonotonicOperator& g2,
                    int cap = kDefaultElementCap);

// The canonical representative of the class keyed by `family`: the operator
// x -> intersection of the members containing x. The family must be complete
// over its carrier (precondition_failed otherwise); the result is verified to
// satisfy S_G = family (verification_failed, a certificate, if not).
MonotonicOperator canonical_operator(const UpSetFamily& family, int cap = kDefaultElementCap);

// The lattice of operator classes over M(L): one class per complete
// {empty, M(L)}-sublattice family of F_{M(L)}, ordered by family inclusion.
// Meets are family intersections and joins are union-closures; both are
// cross-checked against the glb/lub of the enumerated order.
struct OperatorClassLattice {
  Poset irreducibles;                       // the shared carrier M(L)
  std::vector<UpSetFamily> families;        // class keys, canonical (size, lex) order
  std::vector<MonotonicOperator> representatives;
  Lattice order;                            // element i is families[i]
  std::vector<int> meet_table, join_table;  // constructive tables (intersection / union-closure)
  bool asserted = true;  // false when computed under --force for a non-distributive input
};

// Requires a finite distributive lattice; pass force=true to compute the same
// report for a non-distributive input without asserting the lattice claim.
OperatorClassLattice class_lattice(const Lattice& l, int family_cap = kDefaultFamilyCap,
                                   bool force = false);

}  // namespace latrep
