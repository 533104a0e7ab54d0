#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"

namespace latrep {

// A family of up-sets of a carrier poset, kept as a strictly increasing list
// of masks. Ordered by reverse inclusion when used as a lattice.
struct UpSetFamily {
  Poset carrier;
  std::vector<Mask> sets;

  // Sorts, deduplicates and validates that every member is an up-set.
  static UpSetFamily of(Poset carrier, std::vector<Mask> sets);

  int size() const { return static_cast<int>(sets.size()); }
  bool contains(Mask m) const;
  std::optional<int> find(Mask m) const;
  int index_of(Mask m) const;  // throws unknown_element

  bool has_empty() const { return !sets.empty() && sets.front() == 0; }
  bool has_full() const { return !sets.empty() && sets.back() == carrier.all(); }
  bool intersection_closed() const;
  bool union_closed() const;
  // Closed under union and intersection and containing both the empty set and
  // the full carrier; in the finite setting this is completeness.
  bool complete() const {
    return has_empty() && has_full() && intersection_closed() && union_closed();
  }

  std::string label(int i) const { return set_label(carrier, sets[static_cast<std::size_t>(i)]); }
  bool operator==(const UpSetFamily& o) const {
    return carrier.same_structure(o.carrier) && sets == o.sets;
  }
};

// The lattice (family, ⊇): element i is sets[i], p <= q iff p ⊇ q. When the
// family is complete the meet/join tables are cross-checked against union and
// intersection (internal_disagreement if they ever differ).
Lattice family_lattice(const UpSetFamily& fam);

}  // namespace latrep
