#pragma once

#include <optional>
#include <vector>

#include "latrep/birkhoff.hpp"
#include "latrep/family.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"

namespace latrep {

// A map G from a poset into its own powerset that reverses order under
// inclusion: x <= y implies G(x) ⊇ G(y). Validated at construction.
class MonotonicOperator {
 public:
  MonotonicOperator(Poset carrier, std::vector<Mask> assign);

  const Poset& carrier() const { return carrier_; }
  Mask at(int x) const { return assign_[static_cast<std::size_t>(x)]; }
  const std::vector<Mask>& assign() const { return assign_; }

  bool operator==(const MonotonicOperator& o) const {
    return carrier_.same_structure(o.carrier_) && assign_ == o.assign_;
  }

 private:
  Poset carrier_;
  std::vector<Mask> assign_;
};

// X/G: classes of equal G-value, ordered by [x] <= [y] iff G(x) ⊇ G(y).
// Class representatives are least-index; class i of `classes` has members
// `members[i]` and shared value `values[i]`. By construction the class poset
// is (G(X), ⊇) relabeled.
struct QuotientPoset {
  Poset base;
  Poset classes;  // named "[x]" after the least-index representative
  std::vector<int> class_of;
  std::vector<Mask> members;
  std::vector<Mask> values;
};
QuotientPoset quotient(const MonotonicOperator& g);

// The family S_G = { union of the classes in T | T an up-set of X/G }, with
// every property it is known to carry re-verified: it contains the empty set
// and the carrier, is closed under union and intersection, consists of
// up-sets, and T -> S_T is an order isomorphism both ways. Any failed check
// throws internal_disagreement.
struct EmbeddingWitness {
  UpSetFamily host;                 // all up-sets of the carrier
  UpSetFamily image;                // S_G
  std::vector<Mask> quotient_sets;  // up-sets T of X/G, ascending
  std::vector<Mask> expanded;       // S_T, aligned with quotient_sets
};
EmbeddingWitness embedded_family(const MonotonicOperator& g, int cap = kDefaultElementCap);

// Just S_G, without materializing the host family.
UpSetFamily operator_family(const MonotonicOperator& g, int cap = kDefaultElementCap);

// All subfamilies of `all` that contain the empty set and the full carrier
// and are closed under union and intersection, i.e. the complete {0,1}-
// sublattices of the family lattice. Returned as ascending index lists into
// all.sets, ordered by (size, lexicographic).
std::vector<std::vector<int>> complete_sublattice_families(const UpSetFamily& all);

struct EmbeddingVerdict {
  bool embeds = false;
  bool operator_leg = false;  // exists G on M(L) with L0 ≅ F_{M(L)/G}
  bool direct_leg = false;    // exists an injective {0,1,meet,join}-preserving map
  std::optional<MonotonicOperator> witness;  // canonical G for the first witness family
  std::vector<int> witness_family;           // indices into F_{M(L)}'s up-sets
  std::vector<int> iso;                      // L0 -> F_{M(L)/G} element map
  std::optional<std::vector<int>> direct;    // L0 -> L embedding found by search
};

// Decides L0 ∈ E(L): embeddability preserving all meets, joins, bottom and
// top. Both lattices must be representable (precondition_failed otherwise).
// Runs two independent routes — the monotonic-operator search over complete
// sublattice families of F_{M(L)}, and a direct backtracking search for an
// embedding — and requires them to agree (internal_disagreement otherwise).
EmbeddingVerdict decide_embedding(const Lattice& l0, const Lattice& host,
                                  int family_cap = kDefaultFamilyCap,
                                  int element_cap = kDefaultElementCap,
                                  int irr_cap = kDefaultIrreducibleCap);

// An injective map preserving pairwise meets and joins and mapping bottom to
// bottom and top to top, or nullopt. First solution in lexicographic order.
std::optional<std::vector<int>> direct_embedding_search(const Lattice& l0, const Lattice& host);

// For an atomic boolean host: builds the monotonic operator of the piecewise
// construction (shift the family by its top, take the canonical map on the
// bottom of the shifted family, send everything else to the value at the
// least-index element of that bottom). The family must be a sublattice of the
// powerset of M(L) with at least two members; the result is verified to
// satisfy (family, ⊇) ≅ F_{M(L)/G} (verification_failed if not).
MonotonicOperator boolean_embedding_operator(const Lattice& host, const UpSetFamily& family,
                                             int cap = kDefaultElementCap);

}  // namespace latrep
