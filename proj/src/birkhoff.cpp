#include "latrep/birkhoff.hpp"

#include <sstream>

namespace latrep {

UpsetLattice upset_lattice(const Poset& x, int cap) {
  UpSetFamily fam = UpSetFamily::of(x, all_upsets(x, cap));
  Lattice lat = family_lattice(fam);
  if (!distributivity(lat).holds) {
    throw internal_disagreement("the up-set lattice of " + set_label(x, x.all()) +
                                " is not distributive");
  }
  if (fam.sets[static_cast<std::size_t>(lat.bottom())] != x.all() ||
      fam.sets[static_cast<std::size_t>(lat.top())] != 0) {
    throw internal_disagreement("up-set lattice bottom/top are not the full set/empty set");
  }
  return {std::move(fam), std::move(lat)};
}

BirkhoffMap birkhoff_map(const Lattice& l) {
  Mask irr = meet_irreducibles(l);
  std::vector<int> members = bits_of(irr);
  Poset mp = subposet(l.order(), irr);

  std::vector<Mask> image(static_cast<std::size_t>(l.size()), 0);
  for (int p = 0; p < l.size(); ++p) {
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (l.leq(p, members[k])) image[static_cast<std::size_t>(p)] |= bit(static_cast<int>(k));
    }
  }
  UpSetFamily fam = UpSetFamily::of(mp, image);  // validates each image is an up-set
  return {std::move(mp), std::move(image), std::move(fam)};
}

RepresentationVerdict upset_representation(const Lattice& l, int element_cap, int irr_cap) {
  RepresentationVerdict v;
  v.dist = distributivity(l);
  v.decomp = meet_decomposition(l);
  v.prime = meet_prime_condition(l, irr_cap);
  v.predicate_leg = v.dist.holds && v.decomp.holds && v.prime.holds;

  BirkhoffMap bm = birkhoff_map(l);
  v.irreducibles = bm.irreducibles;
  v.map = bm.image;

  UpsetLattice f = upset_lattice(bm.irreducibles, element_cap);
  v.isomorphism_leg = poset_isomorphism(l.order(), f.lattice.order()).has_value();

  if (v.predicate_leg != v.isomorphism_leg) {
    throw internal_disagreement(
        "representability legs disagree: predicates say " +
        std::string(v.predicate_leg ? "yes" : "no") + ", isomorphism search says " +
        std::string(v.isomorphism_leg ? "yes" : "no"));
  }
  v.representable = v.predicate_leg;

  if (v.representable) {
    // The canonical map must itself be the isomorphism: a bijection onto all
    // up-sets that preserves and reflects order, with meet(f(r)) = r.
    if (bm.family.size() != f.family.size()) {
      throw internal_disagreement("canonical map is not onto the up-sets of M(L)");
    }
    for (int p = 0; p < l.size(); ++p) {
      Mask above = meet_irreducibles(l) & l.order().up(p);
      if (l.meet_over(above) != p) {
        throw internal_disagreement("meet of the canonical image does not recover " + l.name(p));
      }
      for (int q = 0; q < l.size(); ++q) {
        bool fle = subset(v.map[static_cast<std::size_t>(q)], v.map[static_cast<std::size_t>(p)]);
        if (l.leq(p, q) != fle) {
          throw internal_disagreement("canonical map does not preserve order at (" + l.name(p) +
                                      ", " + l.name(q) + ")");
        }
      }
    }
  } else {
    std::ostringstream why;
    if (!v.dist.holds) {
      why << "not distributive (witness " << l.name(v.dist.x) << ", " << l.name(v.dist.y) << ", "
          << l.name(v.dist.z) << "); ";
    }
    if (!v.decomp.holds) {
      why << "no meet decomposition for " << l.name(v.decomp.witness) << "; ";
    }
    if (!v.prime.holds) {
      why << "meet-prime condition fails at q=" << l.name(v.prime.q) << ", C="
          << set_label(l.order(), v.prime.family) << "; ";
    }
    v.reason = why.str();
    if (!v.reason.empty()) v.reason.erase(v.reason.size() - 2);
  }
  return v;
}

bool iso_by_irreducibles(const Lattice& l1, const Lattice& l2, int element_cap, int irr_cap) {
  RepresentationVerdict v1 = upset_representation(l1, element_cap, irr_cap);
  RepresentationVerdict v2 = upset_representation(l2, element_cap, irr_cap);
  if (!v1.representable || !v2.representable) {
    throw precondition_failed("the irreducible-poset criterion requires representable lattices");
  }
  bool by_criterion = poset_isomorphism(v1.irreducibles, v2.irreducibles).has_value();
  bool direct = poset_isomorphism(l1.order(), l2.order()).has_value();
  if (by_criterion != direct) {
    throw internal_disagreement("irreducible-poset criterion disagrees with direct isomorphism");
  }
  return by_criterion;
}

}  // namespace latrep
